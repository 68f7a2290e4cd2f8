#pragma once

#include <string>
#include <vector>

#include "ggt/garside.hpp"

namespace ggt::garside {

/// Words over {a,b,c} for the auxiliary generators d, e, f.
struct SixGenerators {
    std::string name;
    Word d;
    Word e;
    Word f;
};

enum class Fixture {
    literal,  // e = a b a^-1, f = c b c^-1, d = (ac)^-1 b (ac)
    left,     // every auxiliary generator is g b g^-1
    right,    // every auxiliary generator is g^-1 b g
};

const char* to_string(Fixture fixture);
SixGenerators six_generators(Fixture fixture);

/// The alphabet {a,b,c,d,e,f} and its substitution into {a,b,c}.
const Alphabet& six_alphabet();
GenMap six_to_b4(const SixGenerators& gens);

struct Claim {
    std::string claim;
    bool pass = false;
    std::string lhs_nf;
    std::string rhs_nf;
};

/// The ten asserted equalities ba=ae, ae=eb, de=ec, ec=cd, bc=cf, cf=fb,
/// df=fa, fa=ad, ca=ac, ef=fe.
std::vector<Claim> verify_six_generator_presentation(const SixGenerators& gens);

/// Equality claim between two words over {a,b,c,d,e,f}, checked in B4.
Claim check_equal(const std::string& lhs, const std::string& rhs, const SixGenerators& gens);

/// Equality modulo the centre between two words over {x,y} or {a,b,c,d,e,f}.
Claim check_equal_mod_center(const Word& lhs, const Word& rhs, const std::string& claim);

/// `g` acting by conjugation sends each cycle entry to the next and the last
/// back to the first; also checks that the orbit period equals the cycle length.
struct CycleClaim {
    std::string claim;
    bool pass = false;
    int period = 0;
    std::vector<bool> steps;  // steps[i]: entry i goes to entry i+1
};
CycleClaim check_conjugation_cycle(const Word& g, const std::vector<Word>& cycle, Convention convention,
                                   const std::string& claim);

/// Candidate spellings of the third y-orbit element, as printed.
struct Candidate {
    std::string label;
    std::string text;  // over {a,b,c,d,e,f}
};
std::vector<Candidate> hat_b_candidates();

/// All cycle claims for a given fixture and convention: x on (a e c f), (b d);
/// y on (c f d), (a e candidate).
std::vector<CycleClaim> orbit_claims(const SixGenerators& gens, Convention convention, const Word& hat_b);

/// Word over {a,b,c} for a text over {a,b,c,d,e,f} or {x,y}.
Word to_b4(const std::string& text, const SixGenerators& gens);

}  // namespace ggt::garside
