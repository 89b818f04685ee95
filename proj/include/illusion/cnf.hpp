#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace illusion {

using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Index 0 is unused; assignment[v] is the value of variable v.
using Assignment = std::vector<bool>;

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

// Throws a domain error if a literal is zero or out of range.
void check_formula(const CnfFormula& f);

// strict additionally rejects repeated or complementary literals in a clause.
bool is_3cnf(const CnfFormula& f, bool strict = false);
bool is_2p2n(const CnfFormula& f);

bool literal_true(Literal lit, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);

inline constexpr int brute_force_variable_cap = 26;

// Lexicographically first model, variable 1 most significant and false < true.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

// Plain DPLL with unit propagation, for formulas beyond the brute-force cap.
std::optional<Assignment> dpll_sat(const CnfFormula& f);

CnfFormula generate_3cnf(int variables, int clauses, std::uint64_t seed);
// Clauses of size 2 or 3; each variable occurs exactly twice with each sign.
CnfFormula generate_2p2n(int variables, std::uint64_t seed);

// Sorted literals per clause, sorted clause list.
CnfFormula canonicalize(const CnfFormula& f);

// "(1 2 -3)(...)" compact form used in logs.
std::string formula_to_string(const CnfFormula& f);

} // namespace illusion
