#pragma once

#include <optional>
#include <vector>

#include "illusion/network.hpp"

namespace illusion {

// Colours are 0..palette_size-1.
class MultiLabelling {
public:
    MultiLabelling(std::vector<int> colours, int palette_size);

    static MultiLabelling from_binary(const Labelling& labelling);

    int colour(NodeId i) const { return colours_.at(i); }
    int palette_size() const noexcept { return palette_size_; }
    std::size_t size() const noexcept { return colours_.size(); }
    const std::vector<int>& colours() const noexcept { return colours_; }

private:
    std::vector<int> colours_;
    int palette_size_;
};

struct PluralityReport {
    std::optional<int> global_winner;
    std::vector<std::optional<int>> local_winner;
    std::vector<NodeId> under_illusion;
    std::size_t illuded_count = 0;
    Fraction fraction;
};

std::optional<int> plurality_winner(const SocialNetwork& sn, const MultiLabelling& ml);
std::optional<int> local_plurality_winner(const SocialNetwork& sn, const MultiLabelling& ml, NodeId i);
PluralityReport plurality_illusion_report(const SocialNetwork& sn, const MultiLabelling& ml);
bool is_q_plurality_illusion(const SocialNetwork& sn, const MultiLabelling& ml, const Fraction& q);

// The binary report in plurality terms (blue = 0, red = 1).
PluralityReport to_plurality_report(const IllusionReport& report);

struct Fig10Fixture {
    SocialNetwork network;
    MultiLabelling labelling;
};

// Thirteen nodes in three colours (0 blue, 1 red, 2 green), every node under
// plurality illusion. Throws a construction error if that property is lost.
Fig10Fixture fixture_fig10();

} // namespace illusion
