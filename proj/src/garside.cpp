#include "ggt/garside.hpp"

#include <array>

#include "ggt/error.hpp"

namespace ggt::garside {
namespace {

struct Tables {
    std::array<Perm4, 24> perm{};
    std::array<unsigned, 24> right_descents{};  // bit i: p(i) > p(i+1)
    std::array<unsigned, 24> left_descents{};
    std::array<std::array<bool, 24>, 24> left_weighted{};
    std::array<int, 24> flip{};

    Tables() {
        const Perm4 w0 = Perm4::reversal();
        for (int k = 0; k < 24; ++k) {
            const Perm4 p = Perm4::from_index(k);
            perm[static_cast<std::size_t>(k)] = p;
            right_descents[static_cast<std::size_t>(k)] = descents(p);
            left_descents[static_cast<std::size_t>(k)] = descents(p.inverse());
            flip[static_cast<std::size_t>(k)] = (w0 * p * w0).index();
        }
        for (std::size_t i = 0; i < 24; ++i)
            for (std::size_t j = 0; j < 24; ++j)
                left_weighted[i][j] = (left_descents[j] & ~right_descents[i]) == 0;
    }

    static unsigned descents(const Perm4& p) {
        unsigned bits = 0;
        for (int i = 0; i < 3; ++i)
            if (p(i) > p(i + 1)) bits |= 1u << i;
        return bits;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

const Perm4 kDelta = Perm4::reversal();

// Slide letters from the front of rhs onto lhs until the pair is left-weighted.
// Returns true if anything moved.
bool make_left_weighted(Perm4& lhs, Perm4& rhs) {
    const Tables& t = tables();
    bool moved = false;
    for (;;) {
        const unsigned movable = t.left_descents[static_cast<std::size_t>(rhs.index())] &
                                 ~t.right_descents[static_cast<std::size_t>(lhs.index())];
        if (movable == 0) return moved;
        const int i = __builtin_ctz(movable);
        const Perm4 s = Perm4::adjacent(i);
        lhs = lhs * s;
        rhs = s * rhs;
        moved = true;
    }
}

// Accumulates Delta^inf * factors and restores the normal form on demand.
class Builder {
public:
    void append(const Perm4& p) { factors_.push_back(p); }

    void shift_delta(int k) {
        if (k % 2 != 0)
            for (Perm4& p : factors_) p = flip(p);
        inf_ += k;
    }

    NormalForm finish() {
        // Sweep right to left until every pair is left-weighted; a single
        // sweep suffices after one appended factor, the loop is a guard.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t j = factors_.size(); j-- > 1;)
                changed |= make_left_weighted(factors_[j - 1], factors_[j]);
        }
        NormalForm nf;
        nf.inf = inf_;
        std::size_t first = 0;
        while (first < factors_.size() && factors_[first] == kDelta) {
            ++nf.inf;
            ++first;
        }
        std::size_t last = factors_.size();
        while (last > first && factors_[last - 1].is_identity()) --last;
        nf.factors.assign(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                          factors_.begin() + static_cast<std::ptrdiff_t>(last));
        factors_ = nf.factors;
        inf_ = nf.inf;
        return nf;
    }

private:
    int inf_ = 0;
    std::vector<Perm4> factors_;
};

// Reduced word of a permutation braid, by bubble sort on the one-line form.
std::vector<Letter> simple_word(const Perm4& p) {
    // p = s_{i1} ... s_{ik}; peel right descents: p = (p s_i) s_i.
    std::vector<Letter> reversed;
    Perm4 q = p;
    while (!q.is_identity()) {
        for (int i = 0; i < 3; ++i) {
            if (q(i) > q(i + 1)) {
                reversed.push_back(Letter{static_cast<char>('a' + i), 1});
                q = q * Perm4::adjacent(i);
                break;
            }
        }
    }
    return {reversed.rbegin(), reversed.rend()};
}

void require_b4(const Word& w) {
    if (!(w.alphabet() == alphabets::b4()))
        throw Error(ErrorCode::alphabet_mismatch,
                    "braid normal form needs a word over {abc}, got {" + w.alphabet().symbols() + "}");
}

}  // namespace

std::string NormalForm::str() const {
    std::string out = "D^" + std::to_string(inf);
    for (const Perm4& p : factors) out += " | " + p.one_line();
    return out;
}

bool left_weighted(const Perm4& lhs, const Perm4& rhs) {
    return tables().left_weighted[static_cast<std::size_t>(lhs.index())][static_cast<std::size_t>(rhs.index())];
}

Perm4 flip(const Perm4& p) {
    return tables().perm[static_cast<std::size_t>(tables().flip[static_cast<std::size_t>(p.index())])];
}

NormalForm normal_form(const Word& word) {
    require_b4(word);
    Builder b;
    for (const Letter& l : word.letters()) {
        const Perm4 s = Perm4::adjacent(l.gen - 'a');
        if (l.sign > 0) {
            b.append(s);
        } else {
            // g^-1 = Delta^-1 (Delta g^-1), the bracket being simple
            b.shift_delta(-1);
            b.append(kDelta * s);
        }
        b.finish();
    }
    return b.finish();
}

NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs) {
    // Delta^k P Delta^m Q = Delta^(k+m) flip^m(P) Q
    Builder b;
    b.shift_delta(lhs.inf);
    for (const Perm4& p : lhs.factors) b.append(p);
    b.shift_delta(rhs.inf);
    for (const Perm4& q : rhs.factors) {
        b.append(q);
        b.finish();
    }
    return b.finish();
}

Word to_word(const NormalForm& nf) {
    const Word delta(alphabets::b4(), simple_word(kDelta));
    Word out = delta.pow(nf.inf);
    for (const Perm4& p : nf.factors) out = out * Word(alphabets::b4(), simple_word(p));
    return out;
}

bool equals_in_b4(const Word& lhs, const Word& rhs) {
    return normal_form(lhs) == normal_form(rhs);
}

bool equals_mod_center(const Word& lhs, const Word& rhs) {
    const NormalForm nf = normal_form(lhs * rhs.inverse());
    return nf.is_delta_power() && nf.inf % 2 == 0;
}

bool is_central(const Word& word) {
    require_b4(word);
    for (char g : alphabets::b4().symbols()) {
        const Word gen = parse_word(std::string(1, g), alphabets::b4());
        if (!equals_in_b4(word * gen, gen * word)) return false;
    }
    return true;
}

const char* to_string(Convention convention) {
    return convention == Convention::left ? "left" : "right";
}

Convention parse_convention(const std::string& text) {
    if (text == "left") return Convention::left;
    if (text == "right") return Convention::right;
    throw Error(ErrorCode::invalid_argument, "convention must be 'left' or 'right', got '" + text + "'");
}

Word conjugate(const Word& g, const Word& w, Convention convention) {
    return convention == Convention::left ? g * w * g.inverse() : g.inverse() * w * g;
}

Orbit conjugation_orbit(const Word& g, const Word& seed, int steps, Convention convention) {
    require_b4(g);
    require_b4(seed);
    if (steps < 0) throw Error(ErrorCode::invalid_argument, "orbit steps must be non-negative");
    Orbit orbit;
    Word current = seed;
    orbit.elements.push_back(normal_form(current));
    for (int k = 1; k <= steps; ++k) {
        current = conjugate(g, to_word(orbit.elements.back()), convention);
        orbit.elements.push_back(normal_form(current));
        if (orbit.period == 0 && orbit.elements.back() == orbit.elements.front()) orbit.period = k;
    }
    return orbit;
}

}  // namespace ggt::garside
