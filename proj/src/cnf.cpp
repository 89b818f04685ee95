#include "illusion/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "illusion/error.hpp"

namespace illusion {

namespace {

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(token.c_str(), &end, 10);
    return end == token.c_str() + token.size();
}

} // namespace

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    Clause current;
    std::size_t line_no = 0;
    std::size_t last_literal_line = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;
        if (token == "c") continue;
        if (token == "%") break;
        if (token == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            std::string format;
            std::string vars_token;
            std::string clauses_token;
            std::string extra;
            long long vars = 0;
            if (!(fields >> format >> vars_token >> clauses_token) || format != "cnf" ||
                !parse_int(vars_token, vars) || !parse_int(clauses_token, declared_clauses) ||
                vars < 0 || declared_clauses < 0 || (fields >> extra)) {
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            if (vars > 10'000'000) throw ParseError(line_no, "variable count too large");
            f.variable_count = static_cast<int>(vars);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "clause data before the 'p cnf' header");
        do {
            long long lit = 0;
            if (!parse_int(token, lit)) throw ParseError(line_no, "bad literal '" + token + "'");
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::llabs(lit) > f.variable_count) {
                throw ParseError(line_no, "literal " + token + " exceeds the declared " +
                                              std::to_string(f.variable_count) + " variables");
            }
            current.push_back(static_cast<Literal>(lit));
            last_literal_line = line_no;
        } while (fields >> token);
    }
    if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(last_literal_line, "clause is missing its terminating 0");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                      " clauses but " + std::to_string(f.clauses.size()) +
                                      " were found");
    }
    return f;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (Literal lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

void check_formula(const CnfFormula& f) {
    if (f.variable_count < 0) fail(ErrorKind::domain, "negative variable count");
    for (const Clause& c : f.clauses) {
        for (Literal lit : c) {
            if (lit == 0 || std::abs(lit) > f.variable_count) {
                fail(ErrorKind::domain, "literal " + std::to_string(lit) + " out of range");
            }
        }
    }
}

bool is_3cnf(const CnfFormula& f, bool strict) {
    for (const Clause& c : f.clauses) {
        if (c.size() != 3) return false;
        if (!strict) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (std::abs(c[i]) == std::abs(c[j])) return false;
            }
        }
    }
    return true;
}

bool is_2p2n(const CnfFormula& f) {
    std::vector<int> pos(f.variable_count + 1, 0);
    std::vector<int> neg(f.variable_count + 1, 0);
    for (const Clause& c : f.clauses) {
        for (Literal lit : c) {
            if (lit == 0 || std::abs(lit) > f.variable_count) return false;
            (lit > 0 ? pos : neg)[std::abs(lit)]++;
        }
    }
    for (int v = 1; v <= f.variable_count; ++v) {
        if (pos[v] != 2 || neg[v] != 2) return false;
    }
    return true;
}

bool literal_true(Literal lit, const Assignment& a) {
    return lit > 0 ? a.at(lit) : !a.at(-lit);
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    if (static_cast<int>(a.size()) != f.variable_count + 1) return false;
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal lit) { return literal_true(lit, a); });
    });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    check_formula(f);
    const int m = f.variable_count;
    if (m > brute_force_variable_cap) {
        fail(ErrorKind::capacity, "brute force is capped at " +
                                      std::to_string(brute_force_variable_cap) + " variables");
    }
    // Bit (m - v) of the counter holds variable v, so counting up is lexicographic.
    std::vector<std::uint32_t> pos_mask;
    std::vector<std::uint32_t> neg_mask;
    for (const Clause& c : f.clauses) {
        std::uint32_t p = 0;
        std::uint32_t n = 0;
        for (Literal lit : c) (lit > 0 ? p : n) |= 1u << (m - std::abs(lit));
        pos_mask.push_back(p);
        neg_mask.push_back(n);
    }
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto x = static_cast<std::uint32_t>(bits);
        bool ok = true;
        for (std::size_t i = 0; i < pos_mask.size() && ok; ++i) {
            ok = (x & pos_mask[i]) != 0 || (~x & neg_mask[i]) != 0;
        }
        if (!ok) continue;
        Assignment a(m + 1, false);
        for (int v = 1; v <= m; ++v) a[v] = (x >> (m - v)) & 1u;
        return a;
    }
    return std::nullopt;
}

namespace {

class Dpll {
public:
    explicit Dpll(const CnfFormula& f) : f_(f), value_(f.variable_count + 1, 0) {}

    std::optional<Assignment> run() {
        if (!search()) return std::nullopt;
        Assignment a(f_.variable_count + 1, false);
        for (int v = 1; v <= f_.variable_count; ++v) a[v] = value_[v] > 0;
        return a;
    }

private:
    // value_: 0 unassigned, 1 true, -1 false
    int lit_value(Literal lit) const {
        const int v = value_[std::abs(lit)];
        return lit > 0 ? v : -v;
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Clause& c : f_.clauses) {
                int unassigned = 0;
                Literal last = 0;
                bool sat = false;
                for (Literal lit : c) {
                    const int v = lit_value(lit);
                    if (v > 0) {
                        sat = true;
                        break;
                    }
                    if (v == 0) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    value_[std::abs(last)] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            undo(trail);
            return false;
        }
        int pick = 0;
        for (int v = 1; v <= f_.variable_count; ++v) {
            if (value_[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == 0) return true;
        for (int choice : {-1, 1}) {
            value_[pick] = choice;
            if (search()) return true;
        }
        value_[pick] = 0;
        undo(trail);
        return false;
    }

    void undo(const std::vector<int>& trail) {
        for (int v : trail) value_[v] = 0;
    }

    const CnfFormula& f_;
    std::vector<int> value_;
};

} // namespace

std::optional<Assignment> dpll_sat(const CnfFormula& f) {
    check_formula(f);
    return Dpll(f).run();
}

CnfFormula generate_3cnf(int variables, int clauses, std::uint64_t seed) {
    if (variables < 1 || clauses < 1) {
        fail(ErrorKind::generation, "3-CNF generation needs at least one variable and one clause");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(1, variables);
    std::bernoulli_distribution negate(0.5);
    CnfFormula f{variables, {}};
    for (int i = 0; i < clauses; ++i) {
        Clause c;
        for (int j = 0; j < 3; ++j) c.push_back(negate(rng) ? -var(rng) : var(rng));
        f.clauses.push_back(std::move(c));
    }
    return f;
}

CnfFormula generate_2p2n(int variables, std::uint64_t seed) {
    if (variables < 1) fail(ErrorKind::generation, "2P2N generation needs at least one variable");
    std::mt19937_64 rng(seed);
    std::vector<Literal> occurrences;
    for (int v = 1; v <= variables; ++v) {
        occurrences.insert(occurrences.end(), {v, v, -v, -v});
    }
    std::shuffle(occurrences.begin(), occurrences.end(), rng);
    std::vector<std::size_t> sizes;
    std::size_t left = occurrences.size();
    std::bernoulli_distribution three(0.5);
    while (left > 0) {
        std::size_t s = 2;
        if (left <= 3) {
            s = left;
        } else if (left >= 5) {
            s = three(rng) ? 3 : 2;
        }
        sizes.push_back(s);
        left -= s;
    }
    CnfFormula f{variables, {}};
    std::size_t at = 0;
    for (std::size_t s : sizes) {
        f.clauses.emplace_back(occurrences.begin() + at, occurrences.begin() + at + s);
        at += s;
    }
    return f;
}

CnfFormula canonicalize(const CnfFormula& f) {
    CnfFormula out = f;
    for (Clause& c : out.clauses) std::sort(c.begin(), c.end());
    std::sort(out.clauses.begin(), out.clauses.end());
    return out;
}

std::string formula_to_string(const CnfFormula& f) {
    std::ostringstream out;
    for (const Clause& c : f.clauses) {
        out << '(';
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << ')';
    }
    return out.str();
}

} // namespace illusion
