#include "illusion/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "illusion/error.hpp"

namespace illusion {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_refuted: return "not-refuted";
    }
    return "fail";
}

EditMode mode_for(Variant variant) {
    switch (variant) {
    case Variant::mixed: return EditMode::both;
    case Variant::addition: return EditMode::add_only;
    case Variant::removal: return EditMode::remove_only;
    }
    return EditMode::both;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string padded(std::size_t value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, value);
    return buf;
}

bool all_illuded(const SocialNetwork& sn, const Labelling& lab, std::size_t core) {
    const auto report = illusion_report(LabelledNetwork(sn, lab));
    if (report.global_winner != Colour::blue) return false;
    for (NodeId i = 0; i < core; ++i) {
        if (!report.is_illuded(i)) return false;
    }
    return true;
}

} // namespace

VerdictRecord verify_theorem1_roundtrip(const CnfFormula& f, const Fraction& q, GadgetMutation mutation) {
    if (f.variable_count > roundtrip_variable_cap || static_cast<int>(f.clauses.size()) > roundtrip_clause_cap) {
        fail(ErrorKind::capacity, "round trip is capped at 3 variables and 3 clauses");
    }
    const auto start = Clock::now();
    VerdictRecord rec;
    rec.formula = f;
    rec.variant = "verify";
    const auto model = brute_force_sat(f);
    rec.sat = model.has_value();
    const GadgetEncoding core = encode_3cnf(f, mutation);
    const auto found = solve_one_illusion(core.network);
    rec.admits = found.has_value();
    std::vector<std::string> problems;
    if (found && !all_illuded(core.network, *found, core.network.node_count())) {
        problems.push_back("solver witness is not a full illusion");
    }
    if (rec.sat != *rec.admits) problems.push_back(rec.sat ? "satisfiable but no illusion" : "unsatisfiable but illusion found");
    if (model) {
        const Labelling lab = labelling_from_model(core, *model);
        const auto report = illusion_report(LabelledNetwork(core.network, lab));
        if (report.global_winner != Colour::blue ||
            static_cast<std::int64_t>(report.illuded_count) != core.expected_node_count ||
            static_cast<std::int64_t>(count_colour(lab, Colour::red)) != core.i_phi) {
            problems.push_back("model labelling illudes " + std::to_string(report.illuded_count) + " of " +
                               std::to_string(core.expected_node_count));
        }
        if (q != Fraction(1)) {
            const GadgetEncoding padded_enc = encode_q(f, q, mutation);
            const Labelling plab = labelling_from_model(padded_enc, *model);
            if (!is_q_illusion(LabelledNetwork(padded_enc.network, plab), q)) {
                problems.push_back("padded labelling misses q = " + q.to_string());
            }
        }
    }
    rec.verdict = problems.empty() ? Verdict::pass : Verdict::fail;
    for (const auto& p : problems) rec.detail += (rec.detail.empty() ? "" : "; ") + p;
    rec.millis = elapsed_ms(start);
    return rec;
}

VerdictRecord verify_theorem2_witness(const CnfFormula& f, Variant variant, const Fraction& q,
                                      std::int64_t budget_delta) {
    if (f.variable_count > roundtrip_variable_cap) {
        fail(ErrorKind::capacity, "elimination witness check is capped at 3 variables");
    }
    const auto start = Clock::now();
    VerdictRecord rec;
    rec.formula = f;
    rec.variant = std::string(to_string(variant));
    const auto model = brute_force_sat(f);
    rec.sat = model.has_value();
    const EliminationEncoding base = encode_2p2n(f, variant);
    std::vector<std::string> problems;
    const auto audit = audit_margins(base);
    if (!audit.ok) problems.push_back("margin audit: " + audit.problems.front());
    const EliminationEncoding pumped = attach_pump(base, q);
    if (!is_q_illusion(pumped.labelled, q)) problems.push_back("pumped encoding is not a q-illusion");

    if (model) {
        const EditPlan plan = plan_from_model(pumped, *model);
        const auto budget = static_cast<std::size_t>(std::max<std::int64_t>(0, pumped.budget + budget_delta));
        const PlanVerdict pv = verify_plan(pumped.labelled, plan, q, budget, mode_for(variant));
        if (!pv.ok) problems.push_back(std::string(to_string(pv.reason)) + ": " + pv.detail);
        if (pv.reason != PlanReason::invalid_plan && pv.reason != PlanReason::mode_violation) {
            const SocialNetwork after = apply_edit_plan(pumped.labelled.network(), plan);
            const auto pushed = pushed_into_illusion(pumped.labelled, after);
            if (!pushed.empty()) problems.push_back(std::to_string(pushed.size()) + " nodes pushed into illusion");
            const auto report = illusion_report(LabelledNetwork(after, pumped.labelled.labelling()));
            const auto left = static_cast<std::int64_t>(std::count_if(
                report.under_illusion.begin(), report.under_illusion.end(),
                [&](NodeId v) { return v < pumped.base_node_count; }));
            if (left > pumped.allowed_remaining) {
                problems.push_back(std::to_string(left) + " base nodes still illuded, allowed " +
                                   std::to_string(pumped.allowed_remaining));
            }
        }
        rec.plan_ok = problems.empty();
        rec.verdict = problems.empty() ? Verdict::pass : Verdict::fail;
    } else {
        rec.plan_ok = std::nullopt;
        rec.verdict = problems.empty() ? Verdict::not_refuted : Verdict::fail;
    }
    for (const auto& p : problems) rec.detail += (rec.detail.empty() ? "" : "; ") + p;
    rec.millis = elapsed_ms(start);
    return rec;
}

nlohmann::json record_to_json(const VerdictRecord& r) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const Clause& c : r.formula.clauses) clauses.push_back(c);
    nlohmann::json out = {
        {"id", r.id},
        {"formula", {{"variables", r.formula.variable_count}, {"clauses", clauses}}},
        {"variant", r.variant},
        {"sat", r.sat},
        {"verdict", std::string(to_string(r.verdict))},
        {"millis", r.millis},
    };
    if (r.admits) out["admits"] = *r.admits;
    if (r.variant != "verify") out["plan_ok"] = r.plan_ok ? nlohmann::json(*r.plan_ok) : nlohmann::json(nullptr);
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

std::vector<CorpusItem> enumerate_3cnf_corpus(int max_m, int max_clauses) {
    std::vector<CorpusItem> out;
    for (int m = 1; m <= max_m; ++m) {
        std::vector<Literal> lits;
        for (int v = 1; v <= m; ++v) {
            lits.push_back(-v);
            lits.push_back(v);
        }
        std::sort(lits.begin(), lits.end());
        std::vector<Clause> clauses;
        for (std::size_t a = 0; a < lits.size(); ++a) {
            for (std::size_t b = a; b < lits.size(); ++b) {
                for (std::size_t c = b; c < lits.size(); ++c) clauses.push_back({lits[a], lits[b], lits[c]});
            }
        }
        std::size_t index = 0;
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t from, int left) -> void {
            if (left == 0) {
                CnfFormula f{m, {}};
                for (std::size_t i : pick) f.clauses.push_back(clauses[i]);
                out.push_back({"3cnf-m" + std::to_string(m) + "-n" + std::to_string(pick.size()) + "-" +
                                   padded(index++, 5),
                               f});
                return;
            }
            for (std::size_t i = from; i < clauses.size(); ++i) {
                pick.push_back(i);
                self(self, i + 1, left - 1);
                pick.pop_back();
            }
        };
        for (int n = 1; n <= max_clauses; ++n) {
            index = 0;
            rec(rec, 0, n);
        }
    }
    return out;
}

std::vector<CorpusItem> random_3cnf_corpus(int m, int max_clauses, int count, std::uint64_t seed) {
    std::vector<CorpusItem> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % max_clauses;
        out.push_back({"3cnf-rand-m" + std::to_string(m) + "-" + padded(i, 4),
                       canonicalize(generate_3cnf(m, n, seed + static_cast<std::uint64_t>(i)))});
    }
    return out;
}

std::vector<CorpusItem> enumerate_2p2n_corpus(int m) {
    if (m < 1 || m > 2) fail(ErrorKind::capacity, "2P2N enumeration supports m = 1 or 2");
    std::vector<Literal> occ;
    for (int v = 1; v <= m; ++v) occ.insert(occ.end(), {v, v, -v, -v});
    std::set<std::vector<Clause>> seen;
    std::vector<int> block(occ.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int blocks) -> void {
        if (i == occ.size()) {
            CnfFormula f{m, std::vector<Clause>(blocks)};
            for (std::size_t j = 0; j < occ.size(); ++j) f.clauses[block[j]].push_back(occ[j]);
            seen.insert(canonicalize(f).clauses);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    std::vector<CorpusItem> out;
    std::size_t index = 0;
    for (const auto& clauses : seen) {
        out.push_back({"2p2n-m" + std::to_string(m) + "-" + padded(index++, 5), CnfFormula{m, clauses}});
    }
    return out;
}

std::vector<CorpusItem> random_2p2n_corpus(int m, int count, std::uint64_t seed) {
    std::vector<CorpusItem> out;
    for (int i = 0; i < count; ++i) {
        out.push_back({"2p2n-rand-m" + std::to_string(m) + "-" + padded(i, 4),
                       canonicalize(generate_2p2n(m, seed + static_cast<std::uint64_t>(i)))});
    }
    return out;
}

std::vector<VerdictRecord> run_corpus(const std::vector<CorpusItem>& items, unsigned jobs,
                                      const std::function<VerdictRecord(const CorpusItem&)>& task) {
    std::vector<VerdictRecord> out(items.size());
    std::vector<std::string> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = task(items[i]);
            } catch (const std::exception& e) {
                out[i].formula = items[i].formula;
                out[i].verdict = Verdict::fail;
                out[i].detail = std::string("error: ") + e.what();
            }
            out[i].id = items[i].id;
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(out.begin(), out.end(), [](const VerdictRecord& a, const VerdictRecord& b) { return a.id < b.id; });
    return out;
}

std::vector<VerdictRecord> run_theorem1_corpus(const std::vector<CorpusItem>& items, const Fraction& q,
                                               unsigned jobs, GadgetMutation mutation) {
    return run_corpus(items, jobs, [&](const CorpusItem& item) {
        return verify_theorem1_roundtrip(item.formula, q, mutation);
    });
}

std::vector<VerdictRecord> run_theorem2_corpus(const std::vector<CorpusItem>& items, Variant variant,
                                               const Fraction& q, unsigned jobs, std::int64_t budget_delta) {
    return run_corpus(items, jobs, [&](const CorpusItem& item) {
        return verify_theorem2_witness(item.formula, variant, q, budget_delta);
    });
}

std::string verdict_log(const std::vector<VerdictRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
    return out.str();
}

} // namespace illusion
