#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ggt/coset.hpp"
#include "ggt/perm4.hpp"
#include "ggt/words.hpp"

namespace ggt::reps {

/// 2x2 integer matrix, row-major, with overflow-checked arithmetic.
class Matrix2 {
public:
    constexpr Matrix2() = default;
    constexpr Matrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : m_{a, b, c, d} {}

    static constexpr Matrix2 identity() { return {1, 0, 0, 1}; }

    std::int64_t operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }

    Matrix2 operator*(const Matrix2& rhs) const;
    Matrix2 operator-() const;
    std::int64_t det() const;
    /// Exact inverse; throws unless det = 1.
    Matrix2 inverse() const;

    /// `[[p,q],[r,s]]`
    std::string str() const;

    bool operator==(const Matrix2&) const = default;

private:
    std::array<std::int64_t, 4> m_{1, 0, 0, 1};
};

/// S = [[0,1],[-1,0]]
Matrix2 matrix_s();
/// T = [[1,0],[1,1]]
Matrix2 matrix_t();

using MatrixAssignment = std::map<char, Matrix2>;

/// x -> S, y -> -ST
MatrixAssignment pi_assignment();
/// s -> S, t -> T
MatrixAssignment sl2_assignment();

Matrix2 eval_matrix(const Word& w, const MatrixAssignment& assign);

struct RelatorCheck {
    std::string relator;
    Matrix2 value;
    bool pass = false;
};

/// One entry per relator: does it evaluate to the identity?
std::vector<RelatorCheck> verify_matrix_homomorphism(const coset::Presentation& p, const MatrixAssignment& assign);

enum class Composition {
    right_to_left,  // (pq)(i) = p(q(i))
    left_to_right,  // (pq)(i) = q(p(i))
};

const char* to_string(Composition composition);

using PermAssignment = std::map<char, Perm4>;

/// a -> (1 2), b -> (2 3), c -> (3 4)
PermAssignment standard_perm_assignment();

Perm4 eval_perm(const Word& w, const PermAssignment& assign, Composition composition = Composition::right_to_left);

struct Closure {
    std::set<Perm4> elements;
    std::vector<int> common_fixed_points;  // 1-based
    /// Order 6 with exactly one common fixed point.
    bool is_point_stabilizer() const { return elements.size() == 6 && common_fixed_points.size() == 1; }
};

Closure subgroup_closure(const std::vector<Perm4>& gens);

}  // namespace ggt::reps
