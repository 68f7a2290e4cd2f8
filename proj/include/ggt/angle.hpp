#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ggt {

/// Exact rational multiple of pi, p/q * pi with q > 0 and gcd(p, q) = 1.
///
/// Arithmetic is overflow-checked and throws std::overflow_error rather than
/// wrapping. No floating point is ever involved.
class Angle {
public:
    constexpr Angle() = default;
    Angle(std::int64_t num, std::int64_t den = 1);

    static Angle parse(std::string_view text);  // "p/q" or "p"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    Angle operator+(const Angle& other) const;
    Angle operator-(const Angle& other) const;
    Angle operator*(const Angle& factor) const;
    Angle& operator+=(const Angle& other) { return *this = *this + other; }

    bool operator==(const Angle&) const = default;
    std::strong_ordering operator<=>(const Angle& other) const;

    /// "p/q" with q omitted when 1.
    std::string str() const;
    /// "p/q" always, the form used in the graph and complex file formats.
    std::string fraction() const;

    static Angle pi() { return Angle(1); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Largest angle g such that every input is an integer multiple of g.
Angle gcd(const Angle& lhs, const Angle& rhs);

/// Exact quotient value / unit when it is an integer.
std::optional<std::int64_t> divide_exact(const Angle& value, const Angle& unit);

/// Length that may be infinite (girth of a forest, distance across components).
using Length = std::optional<Angle>;

std::string to_string(const Length& length);

}  // namespace ggt
