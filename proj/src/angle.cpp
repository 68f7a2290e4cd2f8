#include "ggt/angle.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ggt {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("angle arithmetic overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("angle arithmetic overflow");
    return out;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
    return value;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("angle with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Angle(parse_int(text));
    return Angle(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Angle Angle::operator+(const Angle& other) const {
    const std::int64_t g = std::gcd(den_, other.den_);
    const std::int64_t lhs = checked_mul(num_, other.den_ / g);
    const std::int64_t rhs = checked_mul(other.num_, den_ / g);
    return Angle(checked_add(lhs, rhs), checked_mul(den_ / g, other.den_));
}

Angle Angle::operator-(const Angle& other) const {
    return *this + Angle(checked_mul(other.num_, -1), other.den_);
}

Angle Angle::operator*(const Angle& factor) const {
    // cross-reduce first to keep intermediates small
    const std::int64_t g1 = std::gcd(num_, factor.den_);
    const std::int64_t g2 = std::gcd(factor.num_, den_);
    return Angle(checked_mul(num_ / g1, factor.num_ / g2), checked_mul(den_ / g2, factor.den_ / g1));
}

std::strong_ordering Angle::operator<=>(const Angle& other) const {
    // 128-bit cross products are exact
    __extension__ typedef __int128 wide;
    const wide lhs = static_cast<wide>(num_) * other.den_;
    const wide rhs = static_cast<wide>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Angle::str() const {
    if (den_ == 1) return std::to_string(num_);
    return fraction();
}

std::string Angle::fraction() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle gcd(const Angle& lhs, const Angle& rhs) {
    // gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), then normalized
    const std::int64_t l = std::lcm(lhs.den(), rhs.den());
    const std::int64_t a = checked_mul(lhs.num(), l / lhs.den());
    const std::int64_t c = checked_mul(rhs.num(), l / rhs.den());
    return Angle(std::gcd(a, c), l);
}

std::optional<std::int64_t> divide_exact(const Angle& value, const Angle& unit) {
    if (unit.is_zero()) return std::nullopt;
    const Angle q = value * Angle(unit.den(), unit.num());
    if (q.den() != 1) return std::nullopt;
    return q.num();
}

std::string to_string(const Length& length) {
    return length ? length->str() : std::string("inf");
}

}  // namespace ggt
