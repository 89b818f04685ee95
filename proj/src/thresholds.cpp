#include "illusion/thresholds.hpp"

#include <string>

#include "illusion/error.hpp"

namespace illusion {

namespace {

using i128 = __int128;

void check_bounds(std::int64_t value, const char* name) {
    if (value > threshold_input_limit) {
        fail(ErrorKind::capacity, std::string(name) + " exceeds the supported bound 10^6");
    }
}

void check_q_bounds(const Fraction& q) {
    if (q.denominator() > threshold_denominator_limit) {
        fail(ErrorKind::capacity, "denominator of q exceeds the supported bound 10^4");
    }
}

void require_open_unit(const Fraction& q) {
    if (q.numerator() <= 0 || q.numerator() >= q.denominator()) {
        fail(ErrorKind::domain, "q = " + q.to_string() + " must lie in (0, 1)");
    }
}

void require_positive(std::int64_t value, const char* name) {
    if (value < 1) fail(ErrorKind::domain, std::string(name) + " must be positive");
}

// (num_a / den_a) >= a / b  with num/den given as integers
bool at_least(i128 num, i128 den, const Fraction& q) {
    return num * q.denominator() >= static_cast<i128>(q.numerator()) * den;
}

void check_h_star_args(std::int64_t k, const Fraction& q) {
    require_positive(k, "k");
    check_bounds(k, "k");
    check_q_bounds(q);
    if (!(q > Fraction(1, 2)) || q > Fraction(1)) {
        fail(ErrorKind::domain, "q = " + q.to_string() + " must lie in (1/2, 1]");
    }
}

void check_sharp_plus_args(std::int64_t m, std::int64_t k, const Fraction& q) {
    require_positive(m, "m");
    require_positive(k, "k");
    check_bounds(m, "m");
    check_bounds(k, "k");
    check_q_bounds(q);
    require_open_unit(q);
}

} // namespace

std::int64_t threshold_h_star(std::int64_t k, const Fraction& q) {
    check_h_star_args(k, q);
    const i128 a = q.numerator();
    const i128 b = q.denominator();
    if (a == b) return 0;
    // b(k + h) >= a(k + 2h)  <=>  h (2a - b) <= k (b - a)
    return static_cast<std::int64_t>((static_cast<i128>(k) * (b - a)) / (2 * a - b));
}

std::int64_t threshold_h_sharp(std::int64_t m, std::int64_t k, const Fraction& q) {
    check_sharp_plus_args(m, k, q);
    if (at_least(m, k, q)) {
        fail(ErrorKind::precondition, "h# requires m/k < q");
    }
    const i128 a = q.numerator();
    const i128 b = q.denominator();
    // b(m + h) < a(k + h + 4)  <=>  h (b - a) < a(k + 4) - b m
    const i128 slack = a * (k + 4) - b * m;
    return static_cast<std::int64_t>((slack - 1) / (b - a));
}

std::int64_t threshold_h_plus(std::int64_t m, std::int64_t k, const Fraction& q) {
    check_sharp_plus_args(m, k, q);
    if (!at_least(m, k, q)) {
        fail(ErrorKind::precondition, "h+ requires m/k >= q");
    }
    const i128 a = q.numerator();
    const i128 b = q.denominator();
    // b m < a(k + h)  <=>  h > (b m - a k) / a
    return static_cast<std::int64_t>((b * m - a * k) / a + 1);
}

namespace detail {

std::int64_t scan_h_star(std::int64_t k, const Fraction& q) {
    check_h_star_args(k, q);
    std::int64_t h = 0;
    while (at_least(k + h + 1, k + 2 * (h + 1), q)) ++h;
    return h;
}

std::int64_t scan_h_sharp(std::int64_t m, std::int64_t k, const Fraction& q) {
    check_sharp_plus_args(m, k, q);
    if (at_least(m, k, q)) fail(ErrorKind::precondition, "h# requires m/k < q");
    std::int64_t h = 0;
    while (!at_least(m + h + 1, k + h + 1 + 4, q)) ++h;
    return h;
}

std::int64_t scan_h_plus(std::int64_t m, std::int64_t k, const Fraction& q) {
    check_sharp_plus_args(m, k, q);
    if (!at_least(m, k, q)) fail(ErrorKind::precondition, "h+ requires m/k >= q");
    std::int64_t h = 0;
    while (at_least(m, k + h, q)) ++h;
    return h;
}

} // namespace detail

} // namespace illusion
