#include "illusion/solvers.hpp"

#include <bit>

#include "illusion/error.hpp"

namespace illusion {

namespace {

constexpr int undecided = -1;
constexpr int blue = 0;
constexpr int red = 1;

class OneIllusionSearch {
public:
    explicit OneIllusionSearch(const SocialNetwork& sn)
        : sn_(sn), n_(sn.node_count()), state_(n_, undecided), red_nb_(n_, 0), open_nb_(n_, 0),
          need_(n_, 0), red_cap_(n_ == 0 ? 0 : (n_ - 1) / 2) {
        for (NodeId i = 0; i < n_; ++i) {
            open_nb_[i] = static_cast<int>(sn.degree(i));
            need_[i] = open_nb_[i] / 2 + 1;
        }
    }

    // Seeds the queue with every node's initial tightness; false on conflict.
    bool root() {
        if (n_ == 0) return false;
        for (NodeId i = 0; i < n_; ++i) {
            if (!check(i)) return false;
        }
        if (red_cap_ == 0) {
            for (NodeId i = 0; i < n_; ++i) queue_.push_back({i, blue});
        }
        return drain();
    }

    std::optional<Labelling> run(OneIllusionStats* stats) {
        stats_ = stats;
        if (!root()) return std::nullopt;
        if (!search()) return std::nullopt;
        Labelling lab(n_);
        for (NodeId i = 0; i < n_; ++i) lab[i] = state_[i] == red ? Colour::red : Colour::blue;
        return lab;
    }

    const std::vector<int>& state() const { return state_; }

private:
    struct Pending {
        NodeId node;
        int colour;
    };

    bool check(NodeId i) {
        const int have = red_nb_[i];
        const int open = open_nb_[i];
        if (have + open < need_[i]) return false;
        if (have + open == need_[i] && open > 0) {
            for (NodeId j : sn_.neighbours(i)) {
                if (state_[j] == undecided) queue_.push_back({j, red});
            }
        }
        return true;
    }

    bool assign(NodeId v, int colour) {
        if (state_[v] != undecided) return state_[v] == colour;
        state_[v] = colour;
        trail_.push_back(v);
        if (stats_) ++stats_->forced;
        // Counters must be fully updated before any early return; unassign reverts them all.
        for (NodeId u : sn_.neighbours(v)) {
            --open_nb_[u];
            if (colour == red) ++red_nb_[u];
        }
        if (colour == red && ++red_count_ > red_cap_) return false;
        for (NodeId u : sn_.neighbours(v)) {
            if (!check(u)) return false;
        }
        if (colour == red && red_count_ == red_cap_) {
            for (NodeId i = 0; i < n_; ++i) {
                if (state_[i] == undecided) queue_.push_back({i, blue});
            }
        }
        return true;
    }

    void unassign(NodeId v) {
        const int colour = state_[v];
        state_[v] = undecided;
        if (colour == red) --red_count_;
        for (NodeId u : sn_.neighbours(v)) {
            ++open_nb_[u];
            if (colour == red) --red_nb_[u];
        }
    }

    bool drain() {
        while (!queue_.empty()) {
            const Pending p = queue_.back();
            queue_.pop_back();
            if (!assign(p.node, p.colour)) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            unassign(trail_.back());
            trail_.pop_back();
        }
    }

    // Nodes short of red support claim disjoint sets of undecided neighbours;
    // each claim needs its own deficit of fresh red nodes.
    bool bound_ok() {
        ++stamp_;
        if (mark_.size() != n_) mark_.assign(n_, 0);
        std::size_t extra = 0;
        for (NodeId i = 0; i < n_; ++i) {
            const int deficit = need_[i] - red_nb_[i];
            if (deficit <= 0) continue;
            bool disjoint = true;
            for (NodeId j : sn_.neighbours(i)) {
                if (state_[j] == undecided && mark_[j] == stamp_) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            for (NodeId j : sn_.neighbours(i)) {
                if (state_[j] == undecided) mark_[j] = stamp_;
            }
            extra += static_cast<std::size_t>(deficit);
            if (red_count_ + extra > red_cap_) return false;
        }
        return true;
    }

    bool search() {
        if (!bound_ok()) return false;
        while (next_ < n_ && state_[next_] != undecided) ++next_;
        if (next_ == n_) return true;
        const NodeId v = next_;
        for (int colour : {red, blue}) {
            if (stats_) ++stats_->branches;
            const std::size_t mark = trail_.size();
            const NodeId saved_next = next_;
            queue_.push_back({v, colour});
            if (drain() && search()) return true;
            undo_to(mark);
            next_ = saved_next;
        }
        return false;
    }

    const SocialNetwork& sn_;
    std::size_t n_;
    std::vector<int> state_;
    std::vector<int> red_nb_;
    std::vector<int> open_nb_;
    std::vector<int> need_;
    std::size_t red_cap_;
    std::size_t red_count_ = 0;
    std::vector<NodeId> trail_;
    std::vector<Pending> queue_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    NodeId next_ = 0;
    OneIllusionStats* stats_ = nullptr;
};

} // namespace

std::optional<Labelling> solve_one_illusion(const SocialNetwork& sn, OneIllusionStats* stats) {
    OneIllusionSearch search(sn);
    return search.run(stats);
}

std::optional<std::vector<int>> one_illusion_root_propagation(const SocialNetwork& sn) {
    OneIllusionSearch search(sn);
    if (!search.root()) return std::nullopt;
    return search.state();
}

std::optional<Labelling> solve_q_illusion_bruteforce(const SocialNetwork& sn, const Fraction& q) {
    const std::size_t n = sn.node_count();
    if (n > brute_force_node_cap) {
        fail(ErrorKind::capacity, "brute-force search is capped at " +
                                      std::to_string(brute_force_node_cap) + " nodes");
    }
    if (q < Fraction(0) || q > Fraction(1)) {
        fail(ErrorKind::domain, "q = " + q.to_string() + " must lie in [0, 1]");
    }
    if (n == 0) return std::nullopt;
    // Node i lives in bit (n - 1 - i), so counting up walks labellings in order.
    std::vector<std::uint32_t> nb(n, 0);
    std::vector<int> degree(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j : sn.neighbours(i)) nb[i] |= 1u << (n - 1 - j);
        degree[i] = static_cast<int>(sn.degree(i));
    }
    const std::int64_t needed = min_count_reaching(static_cast<std::int64_t>(n), q);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto mask = static_cast<std::uint32_t>(bits);
        const int reds = std::popcount(mask);
        const int blues = static_cast<int>(n) - reds;
        std::int64_t illuded = 0;
        if (reds != blues) {
            const bool blue_wins = blues > reds;
            for (NodeId i = 0; i < n; ++i) {
                const int r = std::popcount(mask & nb[i]);
                const int b = degree[i] - r;
                if (blue_wins ? r > b : b > r) ++illuded;
            }
        }
        if (illuded < needed) continue;
        Labelling lab(n);
        for (NodeId i = 0; i < n; ++i) lab[i] = (mask >> (n - 1 - i)) & 1u ? Colour::red : Colour::blue;
        return lab;
    }
    return std::nullopt;
}

} // namespace illusion
