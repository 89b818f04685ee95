#include "illusion/plurality.hpp"

#include <algorithm>
#include <array>

#include "illusion/error.hpp"
#include "illusion/solvers.hpp"

namespace illusion {

MultiLabelling::MultiLabelling(std::vector<int> colours, int palette_size)
    : colours_(std::move(colours)), palette_size_(palette_size) {
    if (palette_size_ < 2) fail(ErrorKind::palette, "palette needs at least two colours");
    for (int c : colours_) {
        if (c < 0 || c >= palette_size_) {
            fail(ErrorKind::palette, "colour " + std::to_string(c) + " outside a palette of " +
                                         std::to_string(palette_size_));
        }
    }
}

MultiLabelling MultiLabelling::from_binary(const Labelling& labelling) {
    std::vector<int> colours(labelling.size());
    for (std::size_t i = 0; i < labelling.size(); ++i) colours[i] = labelling[i] == Colour::red ? 1 : 0;
    return MultiLabelling(std::move(colours), 2);
}

namespace {

std::optional<int> unique_argmax(const std::vector<std::size_t>& counts) {
    const auto top = std::max_element(counts.begin(), counts.end());
    if (top == counts.end() || *top == 0) return std::nullopt;
    if (std::count(counts.begin(), counts.end(), *top) != 1) return std::nullopt;
    return static_cast<int>(top - counts.begin());
}

void check_size(const SocialNetwork& sn, const MultiLabelling& ml) {
    if (ml.size() != sn.node_count()) {
        fail(ErrorKind::domain, "labelling covers " + std::to_string(ml.size()) +
                                    " nodes but the network has " + std::to_string(sn.node_count()));
    }
}

} // namespace

std::optional<int> plurality_winner(const SocialNetwork& sn, const MultiLabelling& ml) {
    check_size(sn, ml);
    std::vector<std::size_t> counts(ml.palette_size(), 0);
    for (int c : ml.colours()) ++counts[c];
    return unique_argmax(counts);
}

std::optional<int> local_plurality_winner(const SocialNetwork& sn, const MultiLabelling& ml, NodeId i) {
    check_size(sn, ml);
    std::vector<std::size_t> counts(ml.palette_size(), 0);
    for (NodeId j : sn.neighbours(i)) ++counts[ml.colour(j)];
    return unique_argmax(counts);
}

PluralityReport plurality_illusion_report(const SocialNetwork& sn, const MultiLabelling& ml) {
    PluralityReport report;
    report.global_winner = plurality_winner(sn, ml);
    const std::size_t n = sn.node_count();
    report.local_winner.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        report.local_winner[i] = local_plurality_winner(sn, ml, i);
        if (report.global_winner && report.local_winner[i] && *report.local_winner[i] != *report.global_winner) {
            report.under_illusion.push_back(i);
        }
    }
    report.illuded_count = report.under_illusion.size();
    report.fraction = n == 0 ? Fraction(0)
                             : Fraction(static_cast<std::int64_t>(report.illuded_count),
                                        static_cast<std::int64_t>(n));
    return report;
}

bool is_q_plurality_illusion(const SocialNetwork& sn, const MultiLabelling& ml, const Fraction& q) {
    if (q < Fraction(0) || q > Fraction(1)) fail(ErrorKind::domain, "q must lie in [0, 1]");
    const auto report = plurality_illusion_report(sn, ml);
    return ratio_at_least(static_cast<std::int64_t>(report.illuded_count),
                          static_cast<std::int64_t>(sn.node_count()), q);
}

PluralityReport to_plurality_report(const IllusionReport& report) {
    auto code = [](const std::optional<Colour>& c) -> std::optional<int> {
        if (!c) return std::nullopt;
        return *c == Colour::red ? 1 : 0;
    };
    PluralityReport out;
    out.global_winner = code(report.global_winner);
    for (const auto& w : report.local_winner) out.local_winner.push_back(code(w));
    out.under_illusion = report.under_illusion;
    out.illuded_count = report.illuded_count;
    out.fraction = report.fraction;
    return out;
}

Fig10Fixture fixture_fig10() {
    constexpr int blue = 0;
    constexpr int red = 1;
    constexpr int green = 2;
    // Left: clique A B (red) C D (green), a blue pendant on each.
    // Right: green centre I with J (blue), K L (red), M (green).
    enum : NodeId { A, B, C, D, PA, PB, PC, PD, I, J, K, L, M };
    NetworkBuilder b;
    b.add_nodes(13);
    const std::array<NodeId, 4> clique{A, B, C, D};
    b.add_clique(clique);
    b.add_edge(A, PA);
    b.add_edge(B, PB);
    b.add_edge(C, PC);
    b.add_edge(D, PD);
    for (NodeId v : {J, K, L, M}) b.add_edge(I, v);
    Fig10Fixture fx{b.build(),
                    MultiLabelling({red, red, green, green, blue, blue, blue, blue, green, blue, red, red, green}, 3)};
    const auto report = plurality_illusion_report(fx.network, fx.labelling);
    if (report.global_winner != blue || report.illuded_count != 13) {
        fail(ErrorKind::construction, "fig10 fixture lost its full plurality illusion");
    }
    if (solve_one_illusion(fx.network)) {
        fail(ErrorKind::construction, "fig10 network unexpectedly admits a full majority illusion");
    }
    return fx;
}

} // namespace illusion
