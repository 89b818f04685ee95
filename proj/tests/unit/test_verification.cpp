#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <map>
#include <numeric>
#include <set>

#include "illusion/error.hpp"
#include "illusion/solvers.hpp"
#include "illusion/verification.hpp"
#include "oracles.hpp"

using namespace illusion;

namespace {

bool fully_illuded(const SocialNetwork& sn, const Labelling& lab) {
    const auto c = oracle::census(sn, lab);
    return c.illuded == static_cast<int>(sn.node_count());
}

// Nodes of variable v's gadget in gadget order: p, not-p, clique, dependants.
std::vector<NodeId> variable_nodes(const GadgetEncoding& enc, int v) {
    std::vector<NodeId> lits(2), clique(4), deps(5);
    for (NodeId i = 0; i < enc.roles.size(); ++i) {
        const Role& r = enc.roles[i];
        if (r.kind == RoleKind::literal && r.owner == v) lits[0] = i;
        if (r.kind == RoleKind::literal && r.owner == -v) lits[1] = i;
        if (r.kind == RoleKind::variable_clique && r.owner == v) clique[r.slot] = i;
        if (r.kind == RoleKind::variable_dependant && r.owner == v) deps[r.slot] = i;
    }
    std::vector<NodeId> out = lits;
    out.insert(out.end(), clique.begin(), clique.end());
    out.insert(out.end(), deps.begin(), deps.end());
    return out;
}

} // namespace

TEST_CASE("variable gadget shape") {
    const auto g = build_variable_gadget();
    CHECK(g.network.node_count() == 11);
    CHECK(g.roles.size() == 11);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) CHECK(g.network.has_edge(g.clique[a], g.clique[b]));
    }
    CHECK(fully_illuded(g.network, g.type_a()));
    CHECK(fully_illuded(g.network, g.type_b()));
    CHECK(g.type_a()[g.positive] == Colour::red);
    CHECK(g.type_b()[g.negative] == Colour::red);
}

TEST_CASE("variable gadget: exactly the two types and their swaps") {
    const auto g = build_variable_gadget();
    std::set<Labelling> expected{g.type_a(), g.type_b(), swap_colours(g.type_a()), swap_colours(g.type_b())};
    std::set<Labelling> found;
    for (std::uint64_t bits = 0; bits < (1u << 11); ++bits) {
        const auto lab = oracle::from_bits(11, bits);
        if (fully_illuded(g.network, lab)) found.insert(lab);
    }
    CHECK(found == expected);

    // Both literals blue: some clique node escapes illusion.
    auto lab = g.type_a();
    lab[g.positive] = Colour::blue;
    const auto c = oracle::census(g.network, lab);
    bool clique_escapes = false;
    for (NodeId v : g.clique) clique_escapes = clique_escapes || c.margin[v] >= 0;
    CHECK(clique_escapes);
}

TEST_CASE("clause gadget shape") {
    const auto g = build_clause_gadget();
    CHECK(g.network.node_count() == 16);
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) CHECK(g.network.has_edge(g.clique[a], g.clique[b]));
    }
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(g.network.has_edge(g.ports[a], g.co_dependants[a]));
        for (std::size_t b = a + 1; b < 3; ++b) CHECK(g.network.has_edge(g.co_dependants[a], g.co_dependants[b]));
    }
    for (int open = 0; open < 3; ++open) CHECK(count_colour(g.labelling(open), Colour::red) == 7);
}

TEST_CASE("clause gadget needs a red literal") {
    const auto g = build_clause_gadget();
    // Attach three external literal nodes 16, 17, 18 to the ports.
    std::vector<Edge> edges = g.network.edges();
    for (int j = 0; j < 3; ++j) edges.emplace_back(g.ports[j], 16 + j);
    const SocialNetwork host(19, edges);
    for (std::uint32_t lits = 0; lits < 8; ++lits) {
        std::size_t witnesses = 0;
        for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
            Labelling lab = oracle::from_bits(19, bits | std::uint64_t{lits} << 16);
            const auto c = oracle::census(host, lab);
            bool all = true;
            for (NodeId v = 0; v < 16 && all; ++v) all = c.margin[v] < 0;
            // Blue must win inside the gadget, so at most 7 of its 16 nodes are red.
            if (!all || std::count(lab.begin(), lab.begin() + 16, Colour::red) > 7) continue;
            ++witnesses;
            CHECK(std::count(lab.begin(), lab.begin() + 16, Colour::red) == 7);
        }
        if (lits == 0) {
            CHECK(witnesses == 0);
        } else {
            CHECK(witnesses > 0);
        }
    }
    for (int open = 0; open < 3; ++open) {
        Labelling lab = g.labelling(open);
        for (int j = 0; j < 3; ++j) lab.push_back(j == open ? Colour::red : Colour::blue);
        const auto c = oracle::census(host, lab);
        for (NodeId v = 0; v < 16; ++v) CHECK(c.margin[v] < 0);
    }
}

TEST_CASE("balance gadget") {
    CHECK(build_balance_gadget(4).edge_count() == 2);
    const auto five = build_balance_gadget(5);
    CHECK(five.node_count() == 5);
    CHECK(five.edge_count() == 4);
    CHECK_THROWS_AS(build_balance_gadget(1), Error);
    for (int k = 2; k <= 9; ++k) {
        const auto sn = build_balance_gadget(k);
        for (NodeId v = 0; v < sn.node_count(); ++v) CHECK(sn.degree(v) >= 1);
    }
}

TEST_CASE("encoding sizes") {
    const CnfFormula one{2, {{1, 1, 2}}};
    const auto e1 = encode_3cnf(one);
    CHECK(e1.network.node_count() == 41);
    CHECK(e1.expected_node_count == 41);
    const CnfFormula two{2, {{1, 1, 2}, {-1, -2, 2}}};
    const auto e2 = encode_3cnf(two);
    CHECK(e2.network.node_count() == 59);
    CHECK(e2.i_phi == 29);
    CHECK(e2.roles.size() == 59);
    std::map<RoleKind, int> census;
    for (const Role& r : e2.roles) census[r.kind]++;
    CHECK(census[RoleKind::literal] + census[RoleKind::variable_clique] + census[RoleKind::variable_dependant] == 22);
    CHECK(census[RoleKind::clause_clique] + census[RoleKind::clause_co_dependant] + census[RoleKind::clause_dependant] ==
          32);
    CHECK(census[RoleKind::balance] == 2 + 2 * 2 - 1);
    std::set<std::string> tags;
    for (const Role& r : e2.roles) tags.insert(role_tag(r));
    CHECK(tags.size() == e2.roles.size());
    CHECK_THROWS_AS(encode_3cnf({2, {{1, 2}}}), Error);
}

TEST_CASE("encode_q padding") {
    const CnfFormula f{2, {{1, 1, 2}}};
    CHECK(encode_q(f, Fraction(1)).network == encode_3cnf(f).network);
    const auto padded = encode_q(f, Fraction(3, 4));
    const auto h = padded.padding_pairs;
    CHECK(h > 0);
    CHECK(padded.network.node_count() == 41 + 2 * static_cast<std::size_t>(h));
    CHECK(core_node_count(padded) == 41);
    for (NodeId v = 41; v < padded.network.node_count(); ++v) {
        REQUIRE(padded.network.degree(v) == 1);
        const NodeId w = padded.network.neighbours(v)[0];
        CHECK(w >= 41);
        CHECK((v - 41) / 2 == (w - 41) / 2);
    }
}

TEST_CASE("labelling from a model") {
    const CnfFormula f{2, {{1, 1, 2}}};
    const auto enc = encode_3cnf(f);
    const Assignment model{false, true, false};
    const auto lab = labelling_from_model(enc, model);
    const auto c = oracle::census(enc.network, lab);
    CHECK(c.illuded == 41);
    CHECK(c.red == enc.i_phi);
    CHECK(c.blue == enc.i_phi + 1);
    try {
        labelling_from_model(enc, Assignment{false, false, false});
        FAIL("expected a witness error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::witness);
    }
    const auto padded = encode_q(f, Fraction(3, 4));
    CHECK(oracle::blue_q_illusion(padded.network, labelling_from_model(padded, model), Fraction(3, 4)));
}

TEST_CASE("solver witnesses restrict to the two gadget types") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto f = generate_3cnf(1 + seed % 3, 1 + seed % 2, seed);
        const auto enc = encode_3cnf(f);
        const auto lab = solve_one_illusion(enc.network);
        if (!lab) continue;
        CHECK(fully_illuded(enc.network, *lab));
        const auto g = build_variable_gadget();
        for (int v = 1; v <= f.variable_count; ++v) {
            const auto nodes = variable_nodes(enc, v);
            Labelling restricted;
            for (NodeId id : nodes) restricted.push_back((*lab)[id]);
            CHECK((restricted == g.type_a() || restricted == g.type_b()));
        }
    }
}

TEST_CASE("red deficit bounds the illuded count") {
    std::mt19937_64 rng(3);
    const CnfFormula f{2, {{1, 1, 2}, {-1, 2, 2}}};
    const auto enc = encode_3cnf(f);
    const std::size_t n = enc.network.node_count();
    for (int k = 1; k <= 3; ++k) {
        for (int sample = 0; sample < 300; ++sample) {
            std::vector<NodeId> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            Labelling lab(n, Colour::blue);
            for (std::int64_t i = 0; i < enc.i_phi - k; ++i) lab[order[i]] = Colour::red;
            CHECK(oracle::census(enc.network, lab).illuded <= static_cast<int>(n) - k);
        }
    }
}

TEST_CASE("encoding JSON carries roles") {
    const auto enc = encode_3cnf({1, {{1, 1, 1}}});
    const auto doc = encoding_to_json(enc);
    CHECK(doc.at("nodes").size() == enc.network.node_count());
    CHECK(doc.at("roles").size() == enc.network.node_count());
}
