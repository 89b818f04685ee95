#include "illusion/roles.hpp"

namespace illusion {

std::string_view to_string(RoleKind kind) {
    switch (kind) {
    case RoleKind::variable_clique: return "variable_clique";
    case RoleKind::literal: return "literal";
    case RoleKind::variable_dependant: return "variable_dependant";
    case RoleKind::clause_clique: return "clause_clique";
    case RoleKind::clause_co_dependant: return "clause_co_dependant";
    case RoleKind::clause_dependant: return "clause_dependant";
    case RoleKind::balance: return "balance";
    case RoleKind::padding: return "padding";
    case RoleKind::literal_node: return "literal_node";
    case RoleKind::auxiliary: return "auxiliary";
    case RoleKind::extra: return "extra";
    case RoleKind::verifier: return "verifier";
    case RoleKind::red_group: return "red_group";
    case RoleKind::red_partner: return "red_partner";
    case RoleKind::balance_blue: return "balance_blue";
    case RoleKind::blue_partner: return "blue_partner";
    case RoleKind::blue_pendant: return "blue_pendant";
    case RoleKind::filler_blue: return "filler_blue";
    case RoleKind::pump_up: return "pump_up";
    case RoleKind::pump_down: return "pump_down";
    }
    return "unknown";
}

std::string role_tag(const Role& role) {
    return std::string(to_string(role.kind)) + ":" + std::to_string(role.owner) + ":" +
           std::to_string(role.slot);
}

} // namespace illusion
