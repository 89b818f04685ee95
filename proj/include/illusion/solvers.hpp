#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "illusion/cnf.hpp"
#include "illusion/network.hpp"

namespace illusion {

// ---- illusion search -------------------------------------------------------

struct OneIllusionStats {
    std::uint64_t branches = 0;
    std::uint64_t forced = 0;
};

// Labelling with blue as the strict global winner in which every node is
// under illusion, or nothing. A red-winner witness exists iff its colour swap
// is a blue-winner witness, so this answers the q = 1 question outright.
std::optional<Labelling> solve_one_illusion(const SocialNetwork& sn, OneIllusionStats* stats = nullptr);

// Per-node state after root propagation: -1 undecided, 0 blue, 1 red.
// Nothing on a root conflict.
std::optional<std::vector<int>> one_illusion_root_propagation(const SocialNetwork& sn);

inline constexpr std::size_t brute_force_node_cap = 24;

// Exhaustive in lexicographic order: node 0 is most significant, blue < red.
std::optional<Labelling> solve_q_illusion_bruteforce(const SocialNetwork& sn, const Fraction& q);

// ---- CNF export ------------------------------------------------------------

struct IllusionCnf {
    CnfFormula formula;
    std::vector<int> node_vars;      // true = node is red
    std::vector<int> indicator_vars; // true = node sees a red strict majority
    int aux_lo = 0;
    int aux_hi = -1;
};

// Satisfying assignments are exactly the labellings with a blue strict global
// winner and at least q|N| nodes under illusion. Requires 1/2 < q <= 1.
IllusionCnf export_illusion_cnf(const SocialNetwork& sn, const Fraction& q);

nlohmann::json variable_map_to_json(const IllusionCnf& cnf);
IllusionCnf variable_map_from_json(const nlohmann::json& doc);

// Reads "v ..." lines of a solver transcript (a bare literal list is accepted too).
// Returns nothing when the transcript reports UNSAT.
std::optional<Assignment> parse_model_lines(std::istream& in, int variable_count);
Labelling decode_labelling(const IllusionCnf& map, const Assignment& model);

// ---- elimination -----------------------------------------------------------

enum class EditMode { both, add_only, remove_only };

std::string_view to_string(EditMode mode);
EditMode parse_edit_mode(std::string_view text);

inline constexpr std::size_t exhaustive_node_cap = 12;
inline constexpr std::size_t exhaustive_budget_cap = 3;

// Minimum-size plan after which ln is no longer a q-illusion; ties go to the
// lexicographically first set of pairs.
std::optional<EditPlan> eliminate_exhaustive(const LabelledNetwork& ln, const Fraction& q, std::size_t k,
                                             EditMode mode);

// One edit at a time: take an edit that ends the illusion if there is one,
// otherwise the edit that frees the most nodes and then shrinks total deficit
// the most. Never pushes a node into illusion.
std::optional<EditPlan> eliminate_greedy(const LabelledNetwork& ln, const Fraction& q, std::size_t k,
                                         EditMode mode);

enum class PlanReason { ok, mode_violation, budget_exceeded, invalid_plan, still_illusion };

std::string_view to_string(PlanReason reason);

struct PlanVerdict {
    bool ok = false;
    PlanReason reason = PlanReason::invalid_plan;
    std::string detail;
    std::size_t illuded_after = 0;

    explicit operator bool() const { return ok; }
};

PlanVerdict verify_plan(const LabelledNetwork& ln, const EditPlan& plan, const Fraction& q, std::size_t k,
                        EditMode mode);

// Nodes illuded after the edit that were not illuded before.
std::vector<NodeId> pushed_into_illusion(const LabelledNetwork& before, const SocialNetwork& after);

} // namespace illusion
