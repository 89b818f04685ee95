#include "illusion/network.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "illusion/error.hpp"

namespace illusion {

std::string_view to_string(Colour c) {
    return c == Colour::blue ? "b" : "r";
}

SocialNetwork::SocialNetwork(std::size_t node_count, std::span<const Edge> edges)
    : adjacency_(node_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            fail(ErrorKind::domain, "self-loop on node " + std::to_string(e.u));
        }
        if (e.v >= node_count) {
            fail(ErrorKind::domain, "edge endpoint " + std::to_string(e.v) + " out of range");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const NodeId> SocialNetwork::neighbours(NodeId i) const {
    if (i >= adjacency_.size()) {
        fail(ErrorKind::domain, "node " + std::to_string(i) + " out of range");
    }
    return adjacency_[i];
}

bool SocialNetwork::has_edge(NodeId a, NodeId b) const {
    if (a == b) return false;
    const auto list = neighbours(a);
    return std::binary_search(list.begin(), list.end(), b);
}

NodeId NetworkBuilder::add_node() {
    return static_cast<NodeId>(node_count_++);
}

NodeId NetworkBuilder::add_nodes(std::size_t count) {
    const auto first = static_cast<NodeId>(node_count_);
    node_count_ += count;
    return first;
}

void NetworkBuilder::add_edge(NodeId a, NodeId b) {
    edges_.emplace_back(a, b);
}

void NetworkBuilder::add_clique(std::span<const NodeId> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
    }
}

SocialNetwork NetworkBuilder::build() const {
    return SocialNetwork(node_count_, edges_);
}

LabelledNetwork::LabelledNetwork(SocialNetwork network, Labelling labelling)
    : network_(std::move(network)), labelling_(std::move(labelling)) {
    if (labelling_.size() != network_.node_count()) {
        fail(ErrorKind::domain, "labelling covers " + std::to_string(labelling_.size()) +
                                    " nodes but the network has " +
                                    std::to_string(network_.node_count()));
    }
}

bool IllusionReport::is_illuded(NodeId i) const {
    return std::binary_search(under_illusion.begin(), under_illusion.end(), i);
}

namespace {

std::optional<Colour> strict_majority(std::size_t blue, std::size_t red) {
    if (blue > red) return Colour::blue;
    if (red > blue) return Colour::red;
    return std::nullopt;
}

} // namespace

std::optional<Colour> majority_winner(const LabelledNetwork& ln) {
    const std::size_t red = count_colour(ln.labelling(), Colour::red);
    return strict_majority(ln.node_count() - red, red);
}

std::optional<Colour> local_winner(const LabelledNetwork& ln, NodeId i) {
    std::size_t red = 0;
    const auto nbrs = ln.network().neighbours(i);
    for (NodeId j : nbrs) red += ln.colour(j) == Colour::red;
    return strict_majority(nbrs.size() - red, red);
}

int margin_of_victory(const LabelledNetwork& ln, NodeId i) {
    int margin = 0;
    for (NodeId j : ln.network().neighbours(i)) margin += ln.colour(j) == Colour::blue ? 1 : -1;
    return margin;
}

IllusionReport illusion_report(const LabelledNetwork& ln) {
    IllusionReport report;
    const std::size_t n = ln.node_count();
    report.global_winner = majority_winner(ln);
    report.local_winner.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        report.local_winner[i] = local_winner(ln, i);
        if (report.global_winner && report.local_winner[i] &&
            *report.local_winner[i] != *report.global_winner) {
            report.under_illusion.push_back(i);
        }
    }
    report.illuded_count = report.under_illusion.size();
    report.fraction = n == 0 ? Fraction(0)
                             : Fraction(static_cast<std::int64_t>(report.illuded_count),
                                        static_cast<std::int64_t>(n));
    return report;
}

bool is_q_illusion(const IllusionReport& report, std::size_t node_count, const Fraction& q) {
    if (q < Fraction(0) || q > Fraction(1)) {
        fail(ErrorKind::domain, "q = " + q.to_string() + " must lie in [0, 1]");
    }
    return ratio_at_least(static_cast<std::int64_t>(report.illuded_count),
                          static_cast<std::int64_t>(node_count), q);
}

bool is_q_illusion(const LabelledNetwork& ln, const Fraction& q) {
    return is_q_illusion(illusion_report(ln), ln.node_count(), q);
}

Labelling swap_colours(const Labelling& labelling) {
    Labelling out(labelling.size());
    std::transform(labelling.begin(), labelling.end(), out.begin(), opposite);
    return out;
}

std::size_t count_colour(const Labelling& labelling, Colour c) {
    return static_cast<std::size_t>(std::count(labelling.begin(), labelling.end(), c));
}

void validate_plan(const SocialNetwork& sn, const EditPlan& plan) {
    std::set<Edge> seen;
    auto check_pair = [&](const Edge& e, const char* what) {
        if (e.u == e.v) fail(ErrorKind::plan, std::string(what) + " of a self-loop");
        if (!sn.contains(e.v)) {
            fail(ErrorKind::plan, std::string(what) + " touches missing node " + std::to_string(e.v));
        }
        if (!seen.insert(e).second) {
            fail(ErrorKind::plan, "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      "} appears twice in the plan");
        }
    };
    for (const Edge& e : plan.additions) {
        check_pair(e, "addition");
        if (sn.has_edge(e.u, e.v)) {
            fail(ErrorKind::plan, "addition of existing edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
        }
    }
    for (const Edge& e : plan.removals) {
        check_pair(e, "removal");
        if (!sn.has_edge(e.u, e.v)) {
            fail(ErrorKind::plan, "removal of non-edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
        }
    }
}

SocialNetwork apply_edit_plan(const SocialNetwork& sn, const EditPlan& plan) {
    validate_plan(sn, plan);
    std::vector<Edge> removed = plan.removals;
    std::sort(removed.begin(), removed.end());
    std::vector<Edge> edges;
    edges.reserve(sn.edge_count() + plan.additions.size());
    std::set_difference(sn.edges().begin(), sn.edges().end(), removed.begin(), removed.end(),
                        std::back_inserter(edges));
    edges.insert(edges.end(), plan.additions.begin(), plan.additions.end());
    return SocialNetwork(sn.node_count(), edges);
}

} // namespace illusion
