#pragma once

#include <string>
#include <vector>

#include "ggt/perm4.hpp"
#include "ggt/words.hpp"

namespace ggt::garside {

/// Left-greedy normal form Delta^inf * p_1 ... p_l of a braid on four strands.
/// Each factor is a permutation braid other than 1 and Delta, and every
/// adjacent pair is left-weighted.
struct NormalForm {
    int inf = 0;
    std::vector<Perm4> factors;

    bool operator==(const NormalForm&) const = default;

    bool is_delta_power() const { return factors.empty(); }
    /// `D^k | [i1 i2 i3 i4] | ...`
    std::string str() const;
};

/// Simple-element tables over S4, built once on first use.
bool left_weighted(const Perm4& lhs, const Perm4& rhs);
/// Conjugation by Delta; swaps a and c, fixes b.
Perm4 flip(const Perm4& p);

/// Normal form of a word over {a,b,c}. Throws Error(alphabet_mismatch) otherwise.
NormalForm normal_form(const Word& word);
/// Normal form of a product of two normal forms, computed without words.
NormalForm multiply(const NormalForm& lhs, const NormalForm& rhs);
/// Canonical word spelling the normal form (Delta = abacba).
Word to_word(const NormalForm& nf);

bool equals_in_b4(const Word& lhs, const Word& rhs);
/// Equality in B4 modulo the centre <Delta^2>.
bool equals_mod_center(const Word& lhs, const Word& rhs);
/// Commutes with a, b and c.
bool is_central(const Word& word);

enum class Convention {
    left,   // g . w . g^-1
    right,  // g^-1 . w . g
};

const char* to_string(Convention convention);
Convention parse_convention(const std::string& text);

Word conjugate(const Word& g, const Word& w, Convention convention);

struct Orbit {
    std::vector<NormalForm> elements;  // seed first
    int period = 0;                    // 0 if not closed within the requested steps
};

/// seed, g.seed, g^2.seed, ... up to `steps` conjugations; the period is the
/// first k > 0 with g^k.seed = seed in B4.
Orbit conjugation_orbit(const Word& g, const Word& seed, int steps, Convention convention);

}  // namespace ggt::garside
