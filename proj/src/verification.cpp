#include "illusion/verification.hpp"

#include <algorithm>

#include "illusion/error.hpp"
#include "illusion/network_io.hpp"
#include "illusion/thresholds.hpp"

namespace illusion {

namespace {

struct VariableIds {
    NodeId positive;
    NodeId negative;
    std::array<NodeId, 4> clique;
};

// Literal nodes first, then clique A B C D, then the five dependants
// (two on A, one each on B, C, D). Both literal nodes see C and D.
VariableIds add_variable(NetworkBuilder& b, RoleMap& roles, int var) {
    VariableIds ids{};
    ids.positive = b.add_node();
    ids.negative = b.add_node();
    roles.push_back({RoleKind::literal, var, 0});
    roles.push_back({RoleKind::literal, -var, 0});
    for (int i = 0; i < 4; ++i) {
        ids.clique[i] = b.add_node();
        roles.push_back({RoleKind::variable_clique, var, i});
    }
    b.add_clique(ids.clique);
    const int dependants_of[5] = {0, 0, 1, 2, 3};
    for (int d = 0; d < 5; ++d) {
        const NodeId dep = b.add_node();
        roles.push_back({RoleKind::variable_dependant, var, d});
        b.add_edge(dep, ids.clique[dependants_of[d]]);
    }
    for (NodeId lit : {ids.positive, ids.negative}) {
        b.add_edge(lit, ids.clique[2]);
        b.add_edge(lit, ids.clique[3]);
    }
    return ids;
}

struct ClauseIds {
    std::array<NodeId, 5> clique;
    std::array<NodeId, 3> ports;
    std::array<NodeId, 3> co_dependants;
};

// Clique S A B C D; ports are A, S, B. Each port carries two dependants and a
// co-dependant, the co-dependants form a triangle, C and D get one dependant each.
ClauseIds add_clause(NetworkBuilder& b, RoleMap& roles, int clause) {
    ClauseIds ids{};
    for (int i = 0; i < 5; ++i) {
        ids.clique[i] = b.add_node();
        roles.push_back({RoleKind::clause_clique, clause, i});
    }
    b.add_clique(ids.clique);
    const NodeId s = ids.clique[0];
    const NodeId a = ids.clique[1];
    const NodeId bb = ids.clique[2];
    ids.ports = {a, s, bb};
    for (int j = 0; j < 3; ++j) {
        ids.co_dependants[j] = b.add_node();
        roles.push_back({RoleKind::clause_co_dependant, clause, j});
        b.add_edge(ids.co_dependants[j], ids.ports[j]);
    }
    b.add_clique(ids.co_dependants);
    const NodeId hosts[8] = {a, a, s, s, bb, bb, ids.clique[3], ids.clique[4]};
    for (int d = 0; d < 8; ++d) {
        const NodeId dep = b.add_node();
        roles.push_back({RoleKind::clause_dependant, clause, d});
        b.add_edge(dep, hosts[d]);
    }
    return ids;
}

void add_balance(NetworkBuilder& b, RoleMap& roles, int k) {
    int slot = 0;
    const int pairs = k % 2 == 0 ? k / 2 : (k - 3) / 2;
    for (int i = 0; i < pairs; ++i) {
        const NodeId u = b.add_node();
        const NodeId v = b.add_node();
        roles.push_back({RoleKind::balance, 0, slot++});
        roles.push_back({RoleKind::balance, 0, slot++});
        b.add_edge(u, v);
    }
    if (k % 2 == 1) {
        const std::array<NodeId, 3> tri{b.add_node(), b.add_node(), b.add_node()};
        for (int i = 0; i < 3; ++i) roles.push_back({RoleKind::balance, 0, slot++});
        b.add_clique(tri);
    }
}

SocialNetwork drop_edge(const SocialNetwork& sn, Edge e) {
    EditPlan plan;
    plan.removals.push_back(e);
    return apply_edit_plan(sn, plan);
}

} // namespace

Labelling VariableGadget::type_a() const {
    Labelling lab(network.node_count(), Colour::blue);
    for (NodeId v : clique) lab[v] = Colour::red;
    lab[positive] = Colour::red;
    return lab;
}

Labelling VariableGadget::type_b() const {
    Labelling lab(network.node_count(), Colour::blue);
    for (NodeId v : clique) lab[v] = Colour::red;
    lab[negative] = Colour::red;
    return lab;
}

Labelling ClauseGadget::labelling(int open_port) const {
    if (open_port < 0 || open_port > 2) fail(ErrorKind::domain, "port index must be 0, 1 or 2");
    Labelling lab(network.node_count(), Colour::blue);
    for (NodeId v : clique) lab[v] = Colour::red;
    for (int j = 0; j < 3; ++j) {
        if (j != open_port) lab[co_dependants[j]] = Colour::red;
    }
    return lab;
}

VariableGadget build_variable_gadget() {
    NetworkBuilder b;
    VariableGadget g;
    const auto ids = add_variable(b, g.roles, 1);
    g.network = b.build();
    g.positive = ids.positive;
    g.negative = ids.negative;
    g.clique = ids.clique;
    return g;
}

ClauseGadget build_clause_gadget() {
    NetworkBuilder b;
    ClauseGadget g;
    const auto ids = add_clause(b, g.roles, 0);
    g.network = b.build();
    g.clique = ids.clique;
    g.ports = ids.ports;
    g.co_dependants = ids.co_dependants;
    return g;
}

SocialNetwork build_balance_gadget(int k) {
    if (k < 2) fail(ErrorKind::domain, "balance gadget needs k >= 2");
    NetworkBuilder b;
    RoleMap roles;
    add_balance(b, roles, k);
    return b.build();
}

GadgetEncoding encode_3cnf(const CnfFormula& f, GadgetMutation mutation) {
    check_formula(f);
    if (!is_3cnf(f)) fail(ErrorKind::precondition, "verification encoding needs a 3-CNF formula");
    if (f.variable_count < 1 || f.clauses.empty()) {
        fail(ErrorKind::precondition, "verification encoding needs at least one variable and one clause");
    }
    GadgetEncoding enc;
    enc.formula = f;
    enc.m = f.variable_count;
    enc.n = static_cast<int>(f.clauses.size());
    NetworkBuilder b;
    for (int v = 1; v <= enc.m; ++v) {
        const auto ids = add_variable(b, enc.roles, v);
        enc.literal_index[v] = ids.positive;
        enc.literal_index[-v] = ids.negative;
    }
    std::optional<Edge> first_port;
    for (int c = 0; c < enc.n; ++c) {
        const auto ids = add_clause(b, enc.roles, c);
        for (int j = 0; j < 3; ++j) {
            const NodeId lit = enc.literal_index.at(f.clauses[c][j]);
            b.add_edge(ids.ports[j], lit);
            if (!first_port) first_port = Edge(ids.ports[j], lit);
        }
    }
    const NodeId balance_start = static_cast<NodeId>(b.node_count());
    add_balance(b, enc.roles, enc.m + 2 * enc.n - 1);
    enc.network = b.build();
    if (mutation == GadgetMutation::drop_clause_port) {
        enc.network = drop_edge(enc.network, *first_port);
    } else if (mutation == GadgetMutation::drop_balance_edge) {
        enc.network = drop_edge(enc.network, Edge(balance_start, balance_start + 1));
    }
    enc.expected_node_count = 12LL * enc.m + 18LL * enc.n - 1;
    enc.i_phi = 6LL * enc.m + 9LL * enc.n - 1;
    if (static_cast<std::int64_t>(enc.network.node_count()) != enc.expected_node_count ||
        enc.roles.size() != enc.network.node_count()) {
        fail(ErrorKind::construction, "verification encoding has the wrong node count");
    }
    return enc;
}

GadgetEncoding encode_q(const CnfFormula& f, const Fraction& q, GadgetMutation mutation) {
    GadgetEncoding enc = encode_3cnf(f, mutation);
    const std::int64_t h = threshold_h_star(static_cast<std::int64_t>(enc.network.node_count()), q);
    enc.q = q;
    enc.padding_pairs = h;
    if (h == 0) return enc;
    const std::size_t base = enc.network.node_count();
    std::vector<Edge> edges = enc.network.edges();
    for (std::int64_t i = 0; i < h; ++i) {
        const auto u = static_cast<NodeId>(base + 2 * i);
        edges.emplace_back(u, u + 1);
        enc.roles.push_back({RoleKind::padding, static_cast<int>(i), 0});
        enc.roles.push_back({RoleKind::padding, static_cast<int>(i), 1});
    }
    enc.network = SocialNetwork(base + 2 * h, edges);
    return enc;
}

std::size_t core_node_count(const GadgetEncoding& enc) {
    return enc.network.node_count() - 2 * static_cast<std::size_t>(enc.padding_pairs);
}

Labelling labelling_from_model(const GadgetEncoding& enc, const Assignment& model) {
    if (!satisfies(enc.formula, model)) fail(ErrorKind::witness, "model does not satisfy the formula");
    Labelling lab(enc.network.node_count(), Colour::blue);
    for (NodeId i = 0; i < enc.roles.size(); ++i) {
        const Role& r = enc.roles[i];
        switch (r.kind) {
        case RoleKind::variable_clique:
        case RoleKind::clause_clique:
        case RoleKind::balance:
            lab[i] = Colour::red;
            break;
        case RoleKind::literal:
            lab[i] = literal_true(r.owner, model) ? Colour::red : Colour::blue;
            break;
        case RoleKind::clause_co_dependant: {
            const Clause& c = enc.formula.clauses[r.owner];
            const int open = static_cast<int>(
                std::find_if(c.begin(), c.end(), [&](Literal l) { return literal_true(l, model); }) -
                c.begin());
            lab[i] = r.slot == open ? Colour::blue : Colour::red;
            break;
        }
        case RoleKind::padding:
            lab[i] = r.slot == 0 ? Colour::red : Colour::blue;
            break;
        default:
            break;
        }
    }
    return lab;
}

nlohmann::json roles_to_json(const RoleMap& roles) {
    nlohmann::json out = nlohmann::json::array();
    for (const Role& r : roles) out.push_back(role_tag(r));
    return out;
}

nlohmann::json encoding_to_json(const GadgetEncoding& enc, const Labelling* labelling) {
    nlohmann::json doc = network_to_json(enc.network, labelling);
    doc["roles"] = roles_to_json(enc.roles);
    doc["m"] = enc.m;
    doc["n"] = enc.n;
    doc["i_phi"] = enc.i_phi;
    doc["expected_node_count"] = enc.expected_node_count;
    doc["padding_pairs"] = enc.padding_pairs;
    doc["q"] = enc.q.to_string();
    return doc;
}

} // namespace illusion
