#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace ggt {

/// Permutation of {1,2,3,4}, stored 0-based. Composition is right-to-left:
/// (p * q)(i) = p(q(i)).
class Perm4 {
public:
    constexpr Perm4() : images_{0, 1, 2, 3} {}
    /// images[i] = image of point i (0-based); throws unless a bijection.
    explicit Perm4(std::array<std::uint8_t, 4> images);

    /// Transposition of i and i+1, 0-based i in {0,1,2}.
    static Perm4 adjacent(int i);
    /// Longest element: i -> 3 - i.
    static Perm4 reversal();

    std::uint8_t operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::array<std::uint8_t, 4>& images() const { return images_; }

    Perm4 operator*(const Perm4& rhs) const;
    Perm4 inverse() const;
    bool is_identity() const { return *this == Perm4(); }
    /// Number of inversions (Coxeter length).
    int length() const;
    int order() const;
    /// Lengths of all cycles, fixed points included, sorted decreasingly.
    std::array<int, 4> cycle_type() const;
    /// Dense index in [0, 24).
    int index() const;
    static Perm4 from_index(int index);

    /// One-line notation, 1-based: "[2 1 3 4]".
    std::string one_line() const;
    /// Cycle notation, 1-based, fixed points omitted: "(1 3 2)"; "()" for identity.
    std::string cycles() const;

    bool operator==(const Perm4&) const = default;
    auto operator<=>(const Perm4&) const = default;

private:
    std::array<std::uint8_t, 4> images_;
};

}  // namespace ggt
