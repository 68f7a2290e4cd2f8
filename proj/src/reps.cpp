#include "ggt/reps.hpp"

#include "ggt/error.hpp"

namespace ggt::reps {
namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::overflow, "matrix entry overflow");
    return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::overflow, "matrix entry overflow");
    return out;
}

std::int64_t neg(std::int64_t a) { return mul(a, -1); }

}  // namespace

Matrix2 Matrix2::operator*(const Matrix2& r) const {
    const Matrix2& l = *this;
    return {add(mul(l(0, 0), r(0, 0)), mul(l(0, 1), r(1, 0))), add(mul(l(0, 0), r(0, 1)), mul(l(0, 1), r(1, 1))),
            add(mul(l(1, 0), r(0, 0)), mul(l(1, 1), r(1, 0))), add(mul(l(1, 0), r(0, 1)), mul(l(1, 1), r(1, 1)))};
}

Matrix2 Matrix2::operator-() const {
    return {neg(m_[0]), neg(m_[1]), neg(m_[2]), neg(m_[3])};
}

std::int64_t Matrix2::det() const {
    return add(mul(m_[0], m_[3]), neg(mul(m_[1], m_[2])));
}

Matrix2 Matrix2::inverse() const {
    if (det() != 1) throw Error(ErrorCode::invalid_argument, "matrix " + str() + " is not in SL2(Z)");
    return {m_[3], neg(m_[1]), neg(m_[2]), m_[0]};
}

std::string Matrix2::str() const {
    return "[[" + std::to_string(m_[0]) + "," + std::to_string(m_[1]) + "],[" + std::to_string(m_[2]) + "," +
           std::to_string(m_[3]) + "]]";
}

Matrix2 matrix_s() { return {0, 1, -1, 0}; }
Matrix2 matrix_t() { return {1, 0, 1, 1}; }

MatrixAssignment pi_assignment() {
    return {{'x', matrix_s()}, {'y', -(matrix_s() * matrix_t())}};
}

MatrixAssignment sl2_assignment() {
    return {{'s', matrix_s()}, {'t', matrix_t()}};
}

Matrix2 eval_matrix(const Word& w, const MatrixAssignment& assign) {
    Matrix2 out = Matrix2::identity();
    for (const Letter& l : w.letters()) {
        auto it = assign.find(l.gen);
        if (it == assign.end())
            throw Error(ErrorCode::invalid_argument, std::string("no matrix assigned to '") + l.gen + "'");
        out = out * (l.sign > 0 ? it->second : it->second.inverse());
    }
    return out;
}

std::vector<RelatorCheck> verify_matrix_homomorphism(const coset::Presentation& p, const MatrixAssignment& assign) {
    std::vector<RelatorCheck> out;
    for (const Word& r : p.relators) {
        RelatorCheck check;
        check.relator = r.str();
        check.value = eval_matrix(r, assign);
        check.pass = check.value == Matrix2::identity();
        out.push_back(check);
    }
    return out;
}

const char* to_string(Composition composition) {
    return composition == Composition::right_to_left ? "right-to-left" : "left-to-right";
}

PermAssignment standard_perm_assignment() {
    return {{'a', Perm4::adjacent(0)}, {'b', Perm4::adjacent(1)}, {'c', Perm4::adjacent(2)}};
}

Perm4 eval_perm(const Word& w, const PermAssignment& assign, Composition composition) {
    Perm4 out;
    for (const Letter& l : w.letters()) {
        auto it = assign.find(l.gen);
        if (it == assign.end())
            throw Error(ErrorCode::invalid_argument, std::string("no permutation assigned to '") + l.gen + "'");
        const Perm4 p = l.sign > 0 ? it->second : it->second.inverse();
        out = composition == Composition::right_to_left ? out * p : p * out;
    }
    return out;
}

Closure subgroup_closure(const std::vector<Perm4>& gens) {
    Closure c;
    c.elements.insert(Perm4());
    std::vector<Perm4> frontier{Perm4()};
    while (!frontier.empty()) {
        std::vector<Perm4> next;
        for (const Perm4& p : frontier) {
            for (const Perm4& g : gens) {
                const Perm4 q = p * g;
                if (c.elements.insert(q).second) next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    for (int point = 0; point < 4; ++point) {
        bool fixed = true;
        for (const Perm4& p : c.elements) fixed = fixed && p(point) == point;
        if (fixed) c.common_fixed_points.push_back(point + 1);
    }
    return c;
}

}  // namespace ggt::reps
