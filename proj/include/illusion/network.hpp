#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "illusion/fraction.hpp"

namespace illusion {

using NodeId = std::uint32_t;

enum class Colour : std::uint8_t { blue = 0, red = 1 };

constexpr Colour opposite(Colour c) noexcept {
    return c == Colour::blue ? Colour::red : Colour::blue;
}

std::string_view to_string(Colour c);

// Unordered node pair, stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected, irreflexive graph over dense ids 0..node_count-1.
class SocialNetwork {
public:
    SocialNetwork() = default;

    // Duplicate pairs collapse to a single edge; self-loops and endpoints out of
    // range are rejected with a domain error.
    SocialNetwork(std::size_t node_count, std::span<const Edge> edges);
    SocialNetwork(std::size_t node_count, std::initializer_list<Edge> edges)
        : SocialNetwork(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const NodeId> neighbours(NodeId i) const;
    std::size_t degree(NodeId i) const { return neighbours(i).size(); }
    bool has_edge(NodeId a, NodeId b) const;
    bool contains(NodeId i) const noexcept { return i < adjacency_.size(); }

    // Sorted, deduplicated.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const SocialNetwork&, const SocialNetwork&) = default;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Edge> edges_;
};

// Incremental construction for gadget builders. Repeated edges collapse.
class NetworkBuilder {
public:
    NodeId add_node();
    NodeId add_nodes(std::size_t count); // returns the first id of the block
    void add_edge(NodeId a, NodeId b);
    void add_clique(std::span<const NodeId> members);
    std::size_t node_count() const noexcept { return node_count_; }

    SocialNetwork build() const;

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
};

using Labelling = std::vector<Colour>;

// A social network paired with a total labelling of its nodes.
class LabelledNetwork {
public:
    LabelledNetwork(SocialNetwork network, Labelling labelling);

    const SocialNetwork& network() const noexcept { return network_; }
    const Labelling& labelling() const noexcept { return labelling_; }
    Colour colour(NodeId i) const { return labelling_.at(i); }
    std::size_t node_count() const noexcept { return network_.node_count(); }

private:
    SocialNetwork network_;
    Labelling labelling_;
};

struct IllusionReport {
    std::optional<Colour> global_winner;
    std::vector<std::optional<Colour>> local_winner;
    std::vector<NodeId> under_illusion; // ascending
    std::size_t illuded_count = 0;
    Fraction fraction;                  // illuded_count / node_count (0 for an empty network)

    bool is_illuded(NodeId i) const;
};

std::optional<Colour> majority_winner(const LabelledNetwork& ln);
std::optional<Colour> local_winner(const LabelledNetwork& ln, NodeId i);

// Blue neighbours minus red neighbours.
int margin_of_victory(const LabelledNetwork& ln, NodeId i);

IllusionReport illusion_report(const LabelledNetwork& ln);

// q must satisfy 0 <= q <= 1.
bool is_q_illusion(const IllusionReport& report, std::size_t node_count, const Fraction& q);
bool is_q_illusion(const LabelledNetwork& ln, const Fraction& q);

Labelling swap_colours(const Labelling& labelling);
std::size_t count_colour(const Labelling& labelling, Colour c);

struct EditPlan {
    std::vector<Edge> additions;
    std::vector<Edge> removals;

    std::size_t size() const noexcept { return additions.size() + removals.size(); }
    bool empty() const noexcept { return size() == 0; }

    EditPlan inverse() const { return EditPlan{removals, additions}; }

    friend bool operator==(const EditPlan&, const EditPlan&) = default;
};

// Throws a plan error unless additions are distinct non-edges, removals are
// distinct edges, and neither touches a self-loop or a missing node.
void validate_plan(const SocialNetwork& sn, const EditPlan& plan);
SocialNetwork apply_edit_plan(const SocialNetwork& sn, const EditPlan& plan);

} // namespace illusion
