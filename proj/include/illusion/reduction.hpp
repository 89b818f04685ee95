#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "illusion/cnf.hpp"
#include "illusion/elimination.hpp"
#include "illusion/solvers.hpp"
#include "illusion/verification.hpp"

namespace illusion {

enum class Verdict { pass, fail, not_refuted };

std::string_view to_string(Verdict v);

struct VerdictRecord {
    std::string id;
    CnfFormula formula;
    std::string variant; // "verify" for the verification reduction
    bool sat = false;
    std::optional<bool> admits;  // verification reduction
    std::optional<bool> plan_ok; // elimination reductions
    Verdict verdict = Verdict::fail;
    double millis = 0;
    std::string detail;
};

inline constexpr int roundtrip_variable_cap = 3;
inline constexpr int roundtrip_clause_cap = 3;

// sat(f) <=> the encoding admits a full illusion; for a satisfiable f the
// model's labelling must put every core node under illusion and reach q on the
// padded network.
VerdictRecord verify_theorem1_roundtrip(const CnfFormula& f, const Fraction& q,
                                        GadgetMutation mutation = GadgetMutation::none);

// For a satisfiable f, the witness plan must fit the budget (shifted by
// budget_delta), respect the variant's edit direction, leave at most the
// allowed number of base nodes illuded, push nobody into illusion, and end the
// q-illusion of the pumped network. Unsatisfiable f yields not_refuted when the
// structural audit is clean.
VerdictRecord verify_theorem2_witness(const CnfFormula& f, Variant variant, const Fraction& q,
                                      std::int64_t budget_delta = 0);

EditMode mode_for(Variant variant);

nlohmann::json record_to_json(const VerdictRecord& r);

struct CorpusItem {
    std::string id;
    CnfFormula formula;
};

// Every formula over m variables with 1..max_clauses distinct clauses, each a
// sorted multiset of three literals.
std::vector<CorpusItem> enumerate_3cnf_corpus(int max_m, int max_clauses);
std::vector<CorpusItem> random_3cnf_corpus(int m, int max_clauses, int count, std::uint64_t seed);
// All ways to split the 4m occurrences into clauses, up to clause and literal order.
std::vector<CorpusItem> enumerate_2p2n_corpus(int m);
std::vector<CorpusItem> random_2p2n_corpus(int m, int count, std::uint64_t seed);

// Runs task on every item with up to jobs workers; output is sorted by id.
std::vector<VerdictRecord> run_corpus(const std::vector<CorpusItem>& items, unsigned jobs,
                                      const std::function<VerdictRecord(const CorpusItem&)>& task);

std::vector<VerdictRecord> run_theorem1_corpus(const std::vector<CorpusItem>& items, const Fraction& q,
                                               unsigned jobs, GadgetMutation mutation = GadgetMutation::none);
std::vector<VerdictRecord> run_theorem2_corpus(const std::vector<CorpusItem>& items, Variant variant,
                                               const Fraction& q, unsigned jobs, std::int64_t budget_delta = 0);

std::string verdict_log(const std::vector<VerdictRecord>& records);

} // namespace illusion
