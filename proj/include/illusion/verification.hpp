#pragma once

#include <array>
#include <cstdint>
#include <map>

#include <json.hpp>

#include "illusion/cnf.hpp"
#include "illusion/network.hpp"
#include "illusion/roles.hpp"

namespace illusion {

struct VariableGadget {
    SocialNetwork network;
    RoleMap roles;
    NodeId positive = 0; // literal node p
    NodeId negative = 1; // literal node not-p
    std::array<NodeId, 4> clique{};

    // Clique and p red (true), or clique and not-p red (false); everything else blue.
    Labelling type_a() const;
    Labelling type_b() const;
};

struct ClauseGadget {
    SocialNetwork network;
    RoleMap roles;
    std::array<NodeId, 5> clique{};
    std::array<NodeId, 3> ports{};         // clique members wired to the three literals
    std::array<NodeId, 3> co_dependants{}; // co_dependants[j] hangs off ports[j]

    // The seven-red labelling in which ports[open_port] leans on its literal.
    Labelling labelling(int open_port) const;
};

VariableGadget build_variable_gadget();
ClauseGadget build_clause_gadget();
// Pairs, plus one triangle when k is odd.
SocialNetwork build_balance_gadget(int k);

enum class GadgetMutation {
    none,
    drop_clause_port,  // first port edge of the first clause
    drop_balance_edge, // first balance edge
};

struct GadgetEncoding {
    SocialNetwork network;
    RoleMap roles;
    std::map<Literal, NodeId> literal_index;
    CnfFormula formula;
    int m = 0;
    int n = 0;
    std::int64_t expected_node_count = 0; // 12m + 18n - 1
    std::int64_t i_phi = 0;               // 6m + 9n - 1
    std::int64_t padding_pairs = 0;       // h* pairs appended by encode_q
    Fraction q{1};
};

GadgetEncoding encode_3cnf(const CnfFormula& f, GadgetMutation mutation = GadgetMutation::none);
GadgetEncoding encode_q(const CnfFormula& f, const Fraction& q,
                        GadgetMutation mutation = GadgetMutation::none);

// Throws a witness error unless model satisfies the encoded formula.
Labelling labelling_from_model(const GadgetEncoding& enc, const Assignment& model);

// Nodes of the verification core, i.e. everything but padding pairs.
std::size_t core_node_count(const GadgetEncoding& enc);

nlohmann::json encoding_to_json(const GadgetEncoding& enc, const Labelling* labelling = nullptr);
nlohmann::json roles_to_json(const RoleMap& roles);

} // namespace illusion
