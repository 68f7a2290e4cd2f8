#include "ggt/braid_checks.hpp"

#include <algorithm>

#include "ggt/error.hpp"

namespace ggt::garside {

const char* to_string(Fixture fixture) {
    switch (fixture) {
    case Fixture::literal: return "literal";
    case Fixture::left: return "left";
    case Fixture::right: return "right";
    }
    return "?";
}

SixGenerators six_generators(Fixture fixture) {
    const Alphabet& abc = alphabets::b4();
    auto w = [&](const char* text) { return parse_word(text, abc); };
    switch (fixture) {
    case Fixture::literal: return {"literal", w("CAbac"), w("abA"), w("cbC")};
    case Fixture::left: return {"left", w("acbCA"), w("abA"), w("cbC")};
    case Fixture::right: return {"right", w("CAbac"), w("Aba"), w("Cbc")};
    }
    throw Error(ErrorCode::invalid_argument, "unknown fixture");
}

const Alphabet& six_alphabet() {
    static const Alphabet alphabet("abcdef");
    return alphabet;
}

GenMap six_to_b4(const SixGenerators& gens) {
    const Alphabet& abc = alphabets::b4();
    return GenMap(six_alphabet(), abc,
                  {{'a', parse_word("a", abc)},
                   {'b', parse_word("b", abc)},
                   {'c', parse_word("c", abc)},
                   {'d', gens.d},
                   {'e', gens.e},
                   {'f', gens.f}});
}

Word to_b4(const std::string& text, const SixGenerators& gens) {
    const bool g0 = std::all_of(text.begin(), text.end(), [](char ch) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return !std::isalpha(static_cast<unsigned char>(ch)) || lower == 'x' || lower == 'y';
    });
    if (g0) return substitute(parse_word(text, alphabets::g0()), g0_to_b4());
    return substitute(parse_word(text, six_alphabet()), six_to_b4(gens));
}

Claim check_equal(const std::string& lhs, const std::string& rhs, const SixGenerators& gens) {
    const NormalForm l = normal_form(to_b4(lhs, gens));
    const NormalForm r = normal_form(to_b4(rhs, gens));
    return {lhs + " = " + rhs, l == r, l.str(), r.str()};
}

Claim check_equal_mod_center(const Word& lhs, const Word& rhs, const std::string& claim) {
    return {claim, equals_mod_center(lhs, rhs), normal_form(lhs).str(), normal_form(rhs).str()};
}

std::vector<Claim> verify_six_generator_presentation(const SixGenerators& gens) {
    static const char* const pairs[][2] = {
        {"ba", "ae"}, {"ae", "eb"}, {"de", "ec"}, {"ec", "cd"}, {"bc", "cf"},
        {"cf", "fb"}, {"df", "fa"}, {"fa", "ad"}, {"ca", "ac"}, {"ef", "fe"},
    };
    std::vector<Claim> out;
    for (const auto& p : pairs) {
        Claim c = check_equal(p[0], p[1], gens);
        c.claim = std::string(p[0]) + "=" + p[1];
        out.push_back(std::move(c));
    }
    return out;
}

CycleClaim check_conjugation_cycle(const Word& g, const std::vector<Word>& cycle, Convention convention,
                                   const std::string& claim) {
    CycleClaim out;
    out.claim = claim;
    out.pass = !cycle.empty();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Word& next = cycle[(i + 1) % cycle.size()];
        const bool ok = equals_in_b4(conjugate(g, cycle[i], convention), next);
        out.steps.push_back(ok);
        out.pass = out.pass && ok;
    }
    if (!cycle.empty()) {
        out.period = conjugation_orbit(g, cycle.front(), static_cast<int>(2 * cycle.size()), convention).period;
        out.pass = out.pass && out.period == static_cast<int>(cycle.size());
    }
    return out;
}

std::vector<Candidate> hat_b_candidates() {
    return {
        {"c^-1 b c^2", "Cbcc"},
        {"c^-2 b c^2", "CCbcc"},
        {"f^2 b f^-2", "ffbFF"},
    };
}

std::vector<CycleClaim> orbit_claims(const SixGenerators& gens, Convention convention, const Word& hat_b) {
    auto w = [&](const char* text) { return to_b4(text, gens); };
    const Word x = w("x");
    const Word y = w("y");
    return {
        check_conjugation_cycle(x, {w("a"), w("e"), w("c"), w("f")}, convention, "x: a -> e -> c -> f -> a"),
        check_conjugation_cycle(x, {w("b"), w("d")}, convention, "x: b <-> d"),
        check_conjugation_cycle(y, {w("c"), w("f"), w("d")}, convention, "y: c -> f -> d -> c"),
        check_conjugation_cycle(y, {w("a"), w("e"), hat_b}, convention, "y: a -> e -> B^ -> a"),
    };
}

}  // namespace ggt::garside
