#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "illusion/error.hpp"
#include "illusion/fixtures.hpp"
#include "illusion/network.hpp"
#include "illusion/network_io.hpp"
#include "oracles.hpp"

using namespace illusion;

namespace {

constexpr Colour B = Colour::blue;
constexpr Colour R = Colour::red;

// Blue centre 0 with red leaves 1, 2; blue edge 3-4.
LabelledNetwork five_node() {
    return LabelledNetwork(SocialNetwork(5, {{0, 1}, {0, 2}, {3, 4}}), {B, R, R, B, B});
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::io;
}

} // namespace

TEST_CASE("graph construction") {
    const SocialNetwork sn(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(sn.edge_count() == 2);
    CHECK(sn.has_edge(1, 0));
    CHECK_FALSE(sn.has_edge(0, 2));
    CHECK(sn.degree(1) == 1);
    CHECK(kind_of([] { SocialNetwork(2, {{1, 1}}); }) == ErrorKind::domain);
    CHECK(kind_of([] { SocialNetwork(2, {{0, 2}}); }) == ErrorKind::domain);
    CHECK(kind_of([&] { sn.neighbours(9); }) == ErrorKind::domain);

    NetworkBuilder b;
    const NodeId first = b.add_nodes(4);
    const std::vector<NodeId> all{0, 1, 2, 3};
    b.add_clique(all);
    b.add_edge(first, 1);
    CHECK(b.build().edge_count() == 6);
}

TEST_CASE("winners") {
    CHECK(majority_winner(LabelledNetwork(SocialNetwork(3, {}), {B, B, B})) == B);
    CHECK_FALSE(majority_winner(LabelledNetwork(SocialNetwork(4, {}), {B, B, R, R})).has_value());
    const auto ln = five_node();
    CHECK(local_winner(ln, 0) == R);
    CHECK(local_winner(ln, 3) == B);
    const LabelledNetwork tie(SocialNetwork(3, {{0, 1}, {0, 2}}), {B, B, R});
    CHECK_FALSE(local_winner(tie, 0).has_value());
    CHECK_FALSE(local_winner(LabelledNetwork(SocialNetwork(1, {}), {B}), 0).has_value());
    CHECK(kind_of([&] { local_winner(ln, 5); }) == ErrorKind::domain);
}

TEST_CASE("margins") {
    CHECK(margin_of_victory(LabelledNetwork(SocialNetwork(1, {}), {B}), 0) == 0);
    const LabelledNetwork star(SocialNetwork(4, {{0, 1}, {0, 2}, {0, 3}}), {R, B, B, R});
    CHECK(margin_of_victory(star, 0) == 1);
    CHECK(margin_of_victory(five_node(), 0) == -2);
}

TEST_CASE("five-node report") {
    const auto ln = five_node();
    const auto report = illusion_report(ln);
    CHECK(report.under_illusion == std::vector<NodeId>{0});
    CHECK(report.fraction == Fraction(1, 5));
    CHECK(is_q_illusion(ln, Fraction(1, 5)));
    CHECK_FALSE(is_q_illusion(ln, Fraction(1, 4)));
    CHECK(is_q_illusion(ln, Fraction(0)));
    CHECK(kind_of([&] { is_q_illusion(ln, Fraction(3, 2)); }) == ErrorKind::domain);
    const auto clique = LabelledNetwork(SocialNetwork(3, {{0, 1}, {0, 2}, {1, 2}}), {B, B, B});
    CHECK(illusion_report(clique).illuded_count == 0);
}

TEST_CASE("fig1 fixture") {
    const auto ln = fixture_fig1();
    CHECK(ln.node_count() == 9);
    CHECK(majority_winner(ln) == B);
    CHECK(count_colour(ln.labelling(), R) == 4);
    CHECK(illusion_report(ln).illuded_count == 9);
    CHECK(is_q_illusion(ln, Fraction(1)));
    const auto c = oracle::census(ln.network(), ln.labelling());
    CHECK(c.illuded == 9);
}

TEST_CASE("report agrees with the matrix recount on random graphs") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 12;
        const auto sn = oracle::random_graph(n, 0.35, rng);
        const auto lab = oracle::from_bits(n, rng());
        const LabelledNetwork ln(sn, lab);
        const auto report = illusion_report(ln);
        const auto c = oracle::census(sn, lab);
        CHECK(report.illuded_count == static_cast<std::size_t>(c.illuded));
        for (NodeId i = 0; i < n; ++i) {
            CHECK(margin_of_victory(ln, i) == c.margin[i]);
            if (c.margin[i] == 0) CHECK_FALSE(report.is_illuded(i));
        }
        // Swapping colours flips both winners, so the illuded set is unchanged.
        CHECK(illusion_report(LabelledNetwork(sn, swap_colours(lab))).under_illusion == report.under_illusion);
        // Monotone in q.
        for (std::int64_t a = 0; a <= 6; ++a) {
            if (is_q_illusion(ln, Fraction(a, 6))) {
                for (std::int64_t b = 0; b <= a; ++b) CHECK(is_q_illusion(ln, Fraction(b, 6)));
            }
        }
    }
}

TEST_CASE("dependants of a fully illuded node lean on a red neighbour") {
    const auto ln = fixture_fig1();
    const auto& sn = ln.network();
    for (NodeId i = 0; i < sn.node_count(); ++i) {
        if (sn.degree(i) == 1) CHECK(ln.colour(sn.neighbours(i)[0]) == R);
    }
}

TEST_CASE("edit plans") {
    const SocialNetwork two(2, {});
    CHECK(apply_edit_plan(two, {}) == two);
    const auto added = apply_edit_plan(two, EditPlan{{{0, 1}}, {}});
    CHECK(added.edge_count() == 1);
    const SocialNetwork path(2, {{0, 1}});
    CHECK(apply_edit_plan(path, EditPlan{{}, {{0, 1}}}).edge_count() == 0);
    CHECK(kind_of([&] { apply_edit_plan(path, EditPlan{{{0, 1}}, {}}); }) == ErrorKind::plan);
    CHECK(kind_of([&] { apply_edit_plan(two, EditPlan{{}, {{0, 1}}}); }) == ErrorKind::plan);
    CHECK(kind_of([&] { apply_edit_plan(two, EditPlan{{{0, 0}}, {}}); }) == ErrorKind::plan);
    CHECK(kind_of([&] { apply_edit_plan(two, EditPlan{{{0, 7}}, {}}); }) == ErrorKind::plan);
    CHECK(kind_of([&] { apply_edit_plan(two, EditPlan{{{0, 1}, {1, 0}}, {}}); }) == ErrorKind::plan);

    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + rng() % 8;
        const auto sn = oracle::random_graph(n, 0.5, rng);
        EditPlan plan;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (rng() % 4 == 0) (sn.has_edge(u, v) ? plan.removals : plan.additions).emplace_back(u, v);
            }
        }
        const auto after = apply_edit_plan(sn, plan);
        std::size_t diff = 0;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) diff += sn.has_edge(u, v) != after.has_edge(u, v);
        }
        CHECK(diff == plan.size());
        CHECK(apply_edit_plan(after, plan.inverse()) == sn);
    }
}

TEST_CASE("network JSON round trip") {
    const auto ln = fixture_fig1();
    const auto doc = network_to_json(ln.network(), &ln.labelling());
    const auto back = network_from_json(doc);
    CHECK(back.network == ln.network());
    REQUIRE(back.labels.has_value());
    CHECK(to_binary_labelling(*back.labels) == ln.labelling());
    CHECK_FALSE(network_from_json(network_to_json(ln.network())).labels.has_value());
}

TEST_CASE("network JSON rejects malformed documents") {
    using nlohmann::json;
    const std::vector<json> bad{
        json::object(),
        json{{"nodes", json::array({json{{"id", 1}}})}, {"edges", json::array()}},
        json{{"nodes", json::array({json{{"id", 0}}, json{{"id", 0}}})}, {"edges", json::array()}},
        json{{"nodes", json::array({json{{"id", 0}, {"label", "b"}}, json{{"id", 1}}})}, {"edges", json::array()}},
        json{{"nodes", json::array({json{{"id", 0}, {"label", "x"}}})}, {"edges", json::array()}},
        json{{"nodes", json::array({json{{"id", 0}}})}, {"edges", json::array({json::array({0})})}},
    };
    for (const auto& doc : bad) CHECK(kind_of([&] { network_from_json(doc); }) == ErrorKind::parse);
    const json self_loop{{"nodes", json::array({json{{"id", 0}}})}, {"edges", json::array({json::array({0, 0})})}};
    CHECK_THROWS_AS(network_from_json(self_loop), Error);
}

TEST_CASE("palette labels and sidecars") {
    const nlohmann::json doc = nlohmann::json::parse(
        R"({"nodes": [{"id": 0, "label": "b"}, {"id": 1, "label": "r"}, {"id": 2, "label": "g"}], "edges": [[0, 1]]})");
    const auto nd = network_from_json(doc);
    REQUIRE(nd.labels.has_value());
    CHECK(*nd.labels == PaletteLabels{0, 1, 2});
    CHECK(kind_of([&] { to_binary_labelling(*nd.labels); }) == ErrorKind::palette);
    CHECK(to_palette({B, R}) == PaletteLabels{0, 1});

    std::istringstream edges("# triangle plus a pendant\n0 1\n1 2\n2 0\n\n2 3\n");
    const auto sn = network_from_edge_list(edges);
    CHECK(sn.node_count() == 4);
    CHECK(sn.edge_count() == 4);
    std::istringstream padded("0 1\n");
    CHECK(network_from_edge_list(padded, 6).node_count() == 6);
    std::istringstream broken("0 x\n");
    CHECK(kind_of([&] { network_from_edge_list(broken); }) == ErrorKind::parse);

    std::istringstream sidecar("0 b\n1 r\n2 1\n3 0\n");
    CHECK(labels_from_sidecar(sidecar, 4) == PaletteLabels{0, 1, 1, 0});
    std::istringstream partial("0 b\n");
    CHECK(kind_of([&] { labels_from_sidecar(partial, 2); }) == ErrorKind::parse);
}

TEST_CASE("edit plan JSON") {
    const EditPlan plan{{{0, 1}, {2, 3}}, {{1, 2}}};
    const auto doc = edit_plan_to_json(plan);
    CHECK(doc.at("add").size() == 2);
    CHECK(edit_plan_from_json(doc) == plan);
    CHECK(edit_plan_from_json(nlohmann::json::parse(R"({"add": [[1, 0]]})")).additions[0] == Edge(0, 1));
    CHECK(kind_of([] { edit_plan_from_json(nlohmann::json::array()); }) == ErrorKind::parse);
}

TEST_CASE("report JSON") {
    const auto doc = report_to_json(illusion_report(five_node()));
    CHECK(doc.at("illuded_count") == 1);
    CHECK(doc.at("global_winner") == "b");
    CHECK(doc.at("under_illusion") == nlohmann::json::array({0}));
}

TEST_CASE("missing files raise io errors") {
    CHECK(kind_of([] { read_text_file("/nonexistent/network.json"); }) == ErrorKind::io);
}
