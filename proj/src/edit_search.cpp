#include <algorithm>
#include <set>

#include "illusion/error.hpp"
#include "illusion/solvers.hpp"

namespace illusion {

std::string_view to_string(EditMode mode) {
    switch (mode) {
    case EditMode::both: return "both";
    case EditMode::add_only: return "add";
    case EditMode::remove_only: return "remove";
    }
    return "both";
}

EditMode parse_edit_mode(std::string_view text) {
    if (text == "both") return EditMode::both;
    if (text == "add" || text == "add_only") return EditMode::add_only;
    if (text == "remove" || text == "remove_only") return EditMode::remove_only;
    fail(ErrorKind::domain, "unknown edit mode '" + std::string(text) + "'");
}

std::string_view to_string(PlanReason reason) {
    switch (reason) {
    case PlanReason::ok: return "ok";
    case PlanReason::mode_violation: return "mode_violation";
    case PlanReason::budget_exceeded: return "budget_exceeded";
    case PlanReason::invalid_plan: return "invalid_plan";
    case PlanReason::still_illusion: return "still_illusion";
    }
    return "invalid_plan";
}

namespace {

// Local bookkeeping for a fixed labelling under edge toggles. deficit[i] is
// (neighbours against the global winner) - (neighbours with it); a node is
// illuded iff that is positive.
class ToggleState {
public:
    ToggleState(const LabelledNetwork& ln)
        : ln_(ln), n_(ln.node_count()), winner_(majority_winner(ln)), adj_(n_ * n_, 0), deficit_(n_, 0) {
        for (const Edge& e : ln.network().edges()) {
            adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
        }
        if (!winner_) return;
        for (NodeId i = 0; i < n_; ++i) {
            for (NodeId j : ln.network().neighbours(i)) deficit_[i] += weight(j);
            illuded_ += deficit_[i] > 0;
        }
    }

    bool has_winner() const { return winner_.has_value(); }
    bool adjacent(NodeId u, NodeId v) const { return adj_[u * n_ + v] != 0; }
    std::size_t illuded() const { return illuded_; }
    int deficit(NodeId i) const { return deficit_[i]; }
    std::size_t size() const { return n_; }

    // +1 when j works against the global winner.
    int weight(NodeId j) const { return ln_.colour(j) == *winner_ ? -1 : 1; }

    // Deficit change at u when the pair {u, v} is toggled.
    int delta(NodeId u, NodeId v) const { return adjacent(u, v) ? -weight(v) : weight(v); }

    void toggle(NodeId u, NodeId v) {
        if (!winner_) {
            flip(u, v);
            return;
        }
        const int du = delta(u, v);
        const int dv = delta(v, u);
        update(u, du);
        update(v, dv);
        flip(u, v);
    }

private:
    void flip(NodeId u, NodeId v) {
        adj_[u * n_ + v] ^= 1;
        adj_[v * n_ + u] ^= 1;
    }

    void update(NodeId i, int d) {
        const bool before = deficit_[i] > 0;
        deficit_[i] += d;
        const bool after = deficit_[i] > 0;
        if (before != after) {
            if (after) {
                ++illuded_;
            } else {
                --illuded_;
            }
        }
    }

    const LabelledNetwork& ln_;
    std::size_t n_;
    std::optional<Colour> winner_;
    std::vector<char> adj_;
    std::vector<int> deficit_;
    std::size_t illuded_ = 0;
};

bool mode_allows(EditMode mode, bool is_edge) {
    if (mode == EditMode::add_only) return !is_edge;
    if (mode == EditMode::remove_only) return is_edge;
    return true;
}

EditPlan plan_from_pairs(const SocialNetwork& sn, const std::vector<Edge>& pairs) {
    EditPlan plan;
    for (const Edge& e : pairs) (sn.has_edge(e.u, e.v) ? plan.removals : plan.additions).push_back(e);
    return plan;
}

bool still_q(std::size_t illuded, std::size_t n, const Fraction& q) {
    return ratio_at_least(static_cast<std::int64_t>(illuded), static_cast<std::int64_t>(n), q);
}

} // namespace

std::optional<EditPlan> eliminate_exhaustive(const LabelledNetwork& ln, const Fraction& q, std::size_t k,
                                             EditMode mode) {
    const std::size_t n = ln.node_count();
    if (n > exhaustive_node_cap) {
        fail(ErrorKind::capacity, "exhaustive elimination is capped at " +
                                      std::to_string(exhaustive_node_cap) + " nodes");
    }
    if (k > exhaustive_budget_cap) {
        fail(ErrorKind::capacity, "exhaustive elimination is capped at budget " +
                                      std::to_string(exhaustive_budget_cap));
    }
    if (q < Fraction(0) || q > Fraction(1)) fail(ErrorKind::domain, "q must lie in [0, 1]");
    const SocialNetwork& sn = ln.network();
    std::vector<Edge> candidates;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (mode_allows(mode, sn.has_edge(u, v))) candidates.emplace_back(u, v);
        }
    }
    ToggleState state(ln);
    if (!state.has_winner() || !still_q(state.illuded(), n, q)) return EditPlan{};

    std::vector<std::size_t> pick;
    // Depth-first over increasing index tuples visits subsets of one size in
    // lexicographic order.
    auto search = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
        if (left == 0) return !still_q(state.illuded(), n, q);
        for (std::size_t i = from; i + left <= candidates.size(); ++i) {
            const Edge& e = candidates[i];
            state.toggle(e.u, e.v);
            pick.push_back(i);
            const bool hit = self(self, i + 1, left - 1);
            state.toggle(e.u, e.v);
            if (hit) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t size = 1; size <= k; ++size) {
        pick.clear();
        if (search(search, 0, size)) {
            std::vector<Edge> pairs;
            for (std::size_t i : pick) pairs.push_back(candidates[i]);
            return plan_from_pairs(sn, pairs);
        }
    }
    return std::nullopt;
}

std::optional<EditPlan> eliminate_greedy(const LabelledNetwork& ln, const Fraction& q, std::size_t k,
                                         EditMode mode) {
    if (q < Fraction(0) || q > Fraction(1)) fail(ErrorKind::domain, "q must lie in [0, 1]");
    const std::size_t n = ln.node_count();
    const SocialNetwork& sn = ln.network();
    ToggleState state(ln);
    if (!state.has_winner() || !still_q(state.illuded(), n, q)) return EditPlan{};
    std::set<Edge> used;
    std::vector<Edge> chosen;

    struct Score {
        int freed = 0;
        int deficit_drop = 0;
        bool finishes = false;
        auto key() const { return std::tuple(finishes, freed, deficit_drop); }
    };

    for (std::size_t step = 0; step < k; ++step) {
        std::optional<Score> best;
        Edge best_pair;
        for (NodeId u = 0; u < n; ++u) {
            if (state.deficit(u) <= 0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == u) continue;
                const Edge e(u, v);
                if (used.count(e)) continue;
                if (!mode_allows(mode, state.adjacent(u, v))) continue;
                const int du = state.delta(u, v);
                const int dv = state.delta(v, u);
                const int before_v = state.deficit(v);
                if (before_v <= 0 && before_v + dv > 0) continue; // would push v
                Score s;
                const int before_u = state.deficit(u);
                s.freed = (before_u > 0 && before_u + du <= 0) + (before_v > 0 && before_v + dv <= 0);
                s.deficit_drop = std::max(0, before_u) - std::max(0, before_u + du) + std::max(0, before_v) -
                                 std::max(0, before_v + dv);
                if (s.freed == 0 && s.deficit_drop <= 0) continue;
                s.finishes = !still_q(state.illuded() - static_cast<std::size_t>(s.freed), n, q);
                if (!best || s.key() > best->key() || (s.key() == best->key() && e < best_pair)) {
                    best = s;
                    best_pair = e;
                }
            }
        }
        if (!best) break;
        state.toggle(best_pair.u, best_pair.v);
        used.insert(best_pair);
        chosen.push_back(best_pair);
        if (!still_q(state.illuded(), n, q)) {
            EditPlan plan = plan_from_pairs(sn, chosen);
            if (!verify_plan(ln, plan, q, k, mode)) {
                fail(ErrorKind::construction, "greedy produced a plan that does not verify");
            }
            return plan;
        }
    }
    return std::nullopt;
}

PlanVerdict verify_plan(const LabelledNetwork& ln, const EditPlan& plan, const Fraction& q, std::size_t k,
                        EditMode mode) {
    PlanVerdict verdict;
    if ((mode == EditMode::add_only && !plan.removals.empty()) ||
        (mode == EditMode::remove_only && !plan.additions.empty())) {
        verdict.reason = PlanReason::mode_violation;
        verdict.detail = "plan edits in a direction the mode forbids";
        return verdict;
    }
    if (plan.size() > k) {
        verdict.reason = PlanReason::budget_exceeded;
        verdict.detail = "plan has " + std::to_string(plan.size()) + " edits, budget is " + std::to_string(k);
        return verdict;
    }
    SocialNetwork after;
    try {
        after = apply_edit_plan(ln.network(), plan);
    } catch (const Error& e) {
        verdict.reason = PlanReason::invalid_plan;
        verdict.detail = e.what();
        return verdict;
    }
    const LabelledNetwork edited(after, ln.labelling());
    const auto report = illusion_report(edited);
    verdict.illuded_after = report.illuded_count;
    if (is_q_illusion(report, edited.node_count(), q)) {
        verdict.reason = PlanReason::still_illusion;
        verdict.detail = std::to_string(report.illuded_count) + " nodes still illuded";
        return verdict;
    }
    verdict.ok = true;
    verdict.reason = PlanReason::ok;
    return verdict;
}

std::vector<NodeId> pushed_into_illusion(const LabelledNetwork& before, const SocialNetwork& after) {
    const auto r0 = illusion_report(before);
    const auto r1 = illusion_report(LabelledNetwork(after, before.labelling()));
    std::vector<NodeId> out;
    std::set_difference(r1.under_illusion.begin(), r1.under_illusion.end(), r0.under_illusion.begin(),
                        r0.under_illusion.end(), std::back_inserter(out));
    return out;
}

} // namespace illusion
