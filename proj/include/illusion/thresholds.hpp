#pragma once

#include <cstdint>

#include "illusion/fraction.hpp"

namespace illusion {

// Inputs are bounded by k, m <= 10^6 and denominators <= 10^4; every product
// is formed in 128-bit arithmetic, so these bounds leave a wide safety margin.
inline constexpr std::int64_t threshold_input_limit = 1'000'000;
inline constexpr std::int64_t threshold_denominator_limit = 10'000;

/// Padding pairs for the verification reduction: the largest h with
/// (k + h) / (k + 2h) >= q. Requires k >= 1 and 1/2 < q <= 1.
std::int64_t threshold_h_star(std::int64_t k, const Fraction& q);

/// Pump-up size: the largest h with (m + h) / (k + h + 4) < q. At that h the
/// companion inequality (m + h + 1) / (k + h + 4) >= q also holds.
/// Requires m, k >= 1, 0 < q < 1 and m / k < q.
std::int64_t threshold_h_sharp(std::int64_t m, std::int64_t k, const Fraction& q);

/// Pump-down size: the least h with m / (k + h) < q; then (m + 1) / (k + h) >= q.
/// Requires m, k >= 1, 0 < q < 1 and m / k >= q.
std::int64_t threshold_h_plus(std::int64_t m, std::int64_t k, const Fraction& q);

namespace detail {
// Linear scans with exact comparisons. These are the reference definitions the
// closed forms above are checked against; they are only practical for small inputs.
std::int64_t scan_h_star(std::int64_t k, const Fraction& q);
std::int64_t scan_h_sharp(std::int64_t m, std::int64_t k, const Fraction& q);
std::int64_t scan_h_plus(std::int64_t m, std::int64_t k, const Fraction& q);
} // namespace detail

} // namespace illusion
