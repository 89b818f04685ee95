#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "illusion/cnf.hpp"
#include "illusion/network.hpp"
#include "illusion/roles.hpp"

namespace illusion {

enum class Variant { mixed, addition, removal };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

enum class PumpKind { up, down };

struct PumpGadget {
    PumpKind kind = PumpKind::up;
    int k = 0;
    SocialNetwork network;
    Labelling labelling;
};

// k + 4 blue and 4 red nodes, every red node adjacent to every blue node.
PumpGadget build_pump_up(int k);
// Odd k: a k-clique with one more blue than red. Even k: the (k-1) gadget plus
// an isolated red node. Requires k >= 3.
PumpGadget build_pump_down(int k);

struct PumpAttachment {
    PumpKind kind = PumpKind::up;
    int k = 0;
    NodeId first = 0; // pump nodes occupy [first, first + size)
    std::size_t size = 0;
};

struct EliminationEncoding {
    LabelledNetwork labelled{SocialNetwork{}, Labelling{}};
    RoleMap roles;
    // Margin the construction prescribes for each node expected under illusion.
    std::vector<std::optional<int>> designated_margin;
    Variant variant = Variant::mixed;
    CnfFormula formula;
    int m = 0;
    int n = 0;
    std::int64_t budget = 0;
    std::int64_t requirement = 0;
    std::int64_t i_phi = 0;             // nodes under illusion in the base encoding
    std::int64_t allowed_remaining = 0; // illuded nodes a successful plan may leave in the base
    std::size_t base_node_count = 0;
    std::vector<PumpAttachment> pumps;
    // Node ids of literal L's j-th node (j = 0, 1, 2).
    std::vector<std::array<NodeId, 3>> literal_nodes; // index: literal_slot(L)
    std::vector<NodeId> auxiliary;                    // index: literal_slot(L)
    std::vector<NodeId> extra;                        // index: variable - 1
    std::vector<NodeId> verifier;                     // index: clause
    std::vector<NodeId> fillers;

    std::size_t node_count() const { return labelled.node_count(); }
};

// p_v -> 2(v-1), not-p_v -> 2(v-1)+1
int literal_slot(Literal lit);

EliminationEncoding encode_2p2n_mixed(const CnfFormula& f);
EliminationEncoding encode_2p2n_addition(const CnfFormula& f);
EliminationEncoding encode_2p2n_removal(const CnfFormula& f);
EliminationEncoding encode_2p2n(const CnfFormula& f, Variant variant);

// Appends pump gadgets so that leaving allowed_remaining illuded nodes in the
// base falls just below q while one more crosses it:
//   X / T < q <= (X + 1) / T,  X = allowed_remaining + illuded pump nodes.
EliminationEncoding attach_pump(const EliminationEncoding& enc, const Fraction& q);

// Witness edits built from a model. The plan size is not clipped to the budget;
// verify_plan reports any overrun.
EditPlan plan_from_model(const EliminationEncoding& enc, const Assignment& model);

// Per-role group sizes given by the closed-form counts, next to the sizes
// derived from the margin conditions. Only entries that differ are listed.
struct GroupSizeNote {
    std::string role;
    std::int64_t derived = 0;
    std::int64_t formula = 0;
};
std::vector<GroupSizeNote> group_size_discrepancies(const EliminationEncoding& enc);

struct MarginAudit {
    bool ok = true;
    std::size_t designated = 0;
    std::size_t illuded = 0;
    std::vector<std::string> problems;
};
MarginAudit audit_margins(const EliminationEncoding& enc);

nlohmann::json elimination_to_json(const EliminationEncoding& enc);

} // namespace illusion
