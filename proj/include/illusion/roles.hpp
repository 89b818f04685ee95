#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace illusion {

enum class RoleKind {
    // verification encoding
    variable_clique,
    literal,
    variable_dependant,
    clause_clique,
    clause_co_dependant,
    clause_dependant,
    balance,
    padding,
    // elimination encodings
    literal_node,
    auxiliary,
    extra,
    verifier,
    red_group,
    red_partner,
    balance_blue,
    blue_partner,
    blue_pendant,
    filler_blue,
    pump_up,
    pump_down,
};

std::string_view to_string(RoleKind kind);

// owner: variable index (1-based), clause index (0-based) or signed literal,
// depending on the kind; slot distinguishes members within one gadget.
struct Role {
    RoleKind kind = RoleKind::balance;
    int owner = 0;
    int slot = 0;

    friend bool operator==(const Role&, const Role&) = default;
};

// e.g. "literal:-2:0", "clause_clique:0:1"
std::string role_tag(const Role& role);

using RoleMap = std::vector<Role>;

} // namespace illusion
