#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace illusion {

// Exact rational in lowest terms with a positive denominator.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    // "a/b" or bare "a".
    static Fraction parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// count / total >= q, compared as count * den >= num * total.
bool ratio_at_least(std::int64_t count, std::int64_t total, const Fraction& q);
bool ratio_below(std::int64_t count, std::int64_t total, const Fraction& q);

// Smallest integer t with t / total >= q (q >= 0).
std::int64_t min_count_reaching(std::int64_t total, const Fraction& q);

} // namespace illusion
