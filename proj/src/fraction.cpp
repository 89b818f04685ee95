#include "illusion/fraction.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "illusion/error.hpp"

namespace illusion {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        fail(ErrorKind::fraction, "malformed fraction '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) fail(ErrorKind::fraction, "zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Fraction(parse_int(text, text), 1);
    return Fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Fraction::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
    const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
}

bool ratio_at_least(std::int64_t count, std::int64_t total, const Fraction& q) {
    return static_cast<__int128>(count) * q.denominator() >=
           static_cast<__int128>(q.numerator()) * total;
}

bool ratio_below(std::int64_t count, std::int64_t total, const Fraction& q) {
    return !ratio_at_least(count, total, q);
}

std::int64_t min_count_reaching(std::int64_t total, const Fraction& q) {
    if (q.numerator() <= 0) return 0;
    const __int128 need = static_cast<__int128>(q.numerator()) * total;
    const __int128 den = q.denominator();
    return static_cast<std::int64_t>((need + den - 1) / den);
}

} // namespace illusion
