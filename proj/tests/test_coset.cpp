#include <doctest.h>

#include <algorithm>
#include <set>

#include "ggt/coset.hpp"
#include "ggt/error.hpp"
#include "ggt/reps.hpp"
#include "support.hpp"

using namespace ggt;
using namespace ggt::coset;

namespace {

const Strategy kStrategies[] = {Strategy::hlt, Strategy::felsch};

Word w(const Presentation& p, const char* text) { return parse_word(text, p.alphabet); }

std::size_t index_of(const Presentation& p, const std::vector<Word>& h, Strategy s, std::size_t cap = kDefaultCap) {
    const CosetTable t = enumerate(p, h, cap, s);
    REQUIRE(t.status == Status::complete);
    CHECK(verify_table(p, h, t));
    return t.count;
}

Presentation coxeter_s4() {
    return parse_presentation(
        "# symmetric group on four letters\n"
        "generators abc\n"
        "relator a^2\nrelator b^2\nrelator c^2\n"
        "relator (ab)^3\nrelator (bc)^3\nrelator (ac)^2\n");
}

// SL2(Z/2) as 2x2 matrices mod 2 packed in four bits; closure by breadth-first search.
using Mod2 = std::array<int, 4>;
Mod2 mod2(const reps::Matrix2& m) {
    Mod2 out{};
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>(((m(i / 2, i % 2) % 2) + 2) % 2);
    return out;
}
Mod2 mul2(const Mod2& x, const Mod2& y) {
    return {(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2, (x[2] * y[0] + x[3] * y[2]) % 2,
            (x[2] * y[1] + x[3] * y[3]) % 2};
}
std::size_t mod2_closure_size(const std::vector<reps::Matrix2>& gens) {
    std::set<Mod2> seen{{1, 0, 0, 1}};
    std::vector<Mod2> frontier{{1, 0, 0, 1}};
    while (!frontier.empty()) {
        const Mod2 x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            const Mod2 y = mul2(x, mod2(g));
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("fixture presentations") {
    const auto g0 = fixture("G0");
    CHECK(g0.alphabet.symbols() == "xy");
    REQUIRE(g0.relators.size() == 3);
    CHECK(g0.relators[2].str() == "xyxxYXYXXy");
    CHECK(fixture("sl2z").alphabet.symbols() == "st");
    CHECK_THROWS_AS(fixture("G7"), Error);
}

TEST_CASE("indices in the central quotient") {
    const auto p = g0_presentation();
    for (Strategy s : kStrategies) {
        INFO(to_string(s));
        CHECK(index_of(p, {w(p, "xyx^-2"), w(p, "y")}, s) == 4);
        CHECK(index_of(p, {w(p, "x"), w(p, "y")}, s) == 1);
        CHECK(index_of(p, {w(p, "xyx^-2"), w(p, "x")}, s) == 1);
        CHECK(enumerate(p, {w(p, "x")}, 5000, s).status == Status::overflow);
    }
}

TEST_CASE("the action on four cosets matches the symmetric group on four points") {
    // x -> bac is a four-cycle, y -> bacc a three-cycle
    const auto p = g0_presentation();
    const auto t = enumerate(p, {w(p, "xyx^-2"), w(p, "y")});
    const auto image = permutation_image(t);
    REQUIRE(image.size() == 2);
    CHECK(cycle_type(image[0]) == std::vector<std::size_t>{4});
    CHECK(cycle_type(image[1]) == std::vector<std::size_t>{3, 1});
    CHECK(image[1][0] == 0);
    for (const Word& r : p.relators) {
        const auto v = evaluate(image, r);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i);
    }
}

TEST_CASE("sanity subgroups of SL2(Z) against reduction mod 2") {
    const auto p = sl2z_presentation();
    const auto assign = reps::sl2_assignment();
    const std::vector<std::vector<const char*>> subgroups = {
        {"t", "s^2", "st^2S"},
        {"t^2", "st^2S", "s^2"},
        {"s", "t"},
    };
    for (const auto& gens : subgroups) {
        std::vector<Word> words;
        std::vector<reps::Matrix2> mats;
        for (const char* g : gens) {
            words.push_back(w(p, g));
            mats.push_back(reps::eval_matrix(words.back(), assign));
        }
        const std::size_t expected = 6 / mod2_closure_size(mats);
        for (Strategy s : kStrategies) CHECK(index_of(p, words, s) == expected);
    }
    CHECK(index_of(p, {w(p, "t"), w(p, "s^2"), w(p, "st^2S")}, Strategy::hlt) == 3);
    CHECK(index_of(p, {w(p, "t^2"), w(p, "st^2S"), w(p, "s^2")}, Strategy::felsch) == 6);
}

TEST_CASE("the subgroup generated by S^2 T and S^3 T is everything") {
    const auto p = sl2z_presentation();
    for (Strategy s : kStrategies) CHECK(index_of(p, {w(p, "s^2t"), w(p, "s^3t")}, s) == 1);
}

TEST_CASE("infinite index overflows the cap") {
    const auto p = sl2z_presentation();
    for (Strategy s : kStrategies) {
        const auto t = enumerate(p, {w(p, "s")}, 2000, s);
        CHECK(t.status == Status::overflow);
        CHECK(t.action.empty());
    }
    CHECK_THROWS_AS(enumerate(p, {}, 0), Error);
}

TEST_CASE("Coxeter presentation of S4") {
    const auto p = coxeter_s4();
    for (Strategy s : kStrategies) {
        CHECK(index_of(p, {}, s) == 24);
        CHECK(index_of(p, {w(p, "a"), w(p, "b")}, s) == 4);
        CHECK(index_of(p, {w(p, "a")}, s) == 12);
        CHECK(index_of(p, {w(p, "ab")}, s) == 8);
    }
}

TEST_CASE("random subgroups of S4 against permutation closure") {
    const auto p = coxeter_s4();
    const auto assign = reps::standard_perm_assignment();
    auto r = test::rng(20);
    INFO("seed " << test::seed());
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Word> h;
        std::vector<Perm4> perms;
        const int n = test::uniform(r, 0, 2);
        for (int i = 0; i < n; ++i) {
            std::vector<Letter> letters;
            const int len = test::uniform(r, 1, 6);
            for (int k = 0; k < len; ++k) letters.push_back({"abc"[test::uniform(r, 0, 2)], 1});
            h.emplace_back(p.alphabet, letters);
            perms.push_back(reps::eval_perm(h.back(), assign));
        }
        const std::size_t expected = 24 / reps::subgroup_closure(perms).elements.size();
        const Strategy s = kStrategies[trial % 2];
        CHECK(index_of(p, h, s) == expected);
    }
}

TEST_CASE("index does not depend on relator order or cyclic rotation") {
    const auto base = g0_presentation();
    const std::vector<Word> h = {w(base, "xyx^-2"), w(base, "y")};
    auto r = test::rng(21);
    INFO("seed " << test::seed());
    for (int trial = 0; trial < 30; ++trial) {
        Presentation p = base;
        std::shuffle(p.relators.begin(), p.relators.end(), r);
        for (Word& rel : p.relators) {
            const auto& l = rel.letters();
            const auto k = static_cast<long>(test::uniform(r, 0, static_cast<int>(l.size()) - 1));
            std::vector<Letter> rotated(l.begin() + k, l.end());
            rotated.insert(rotated.end(), l.begin(), l.begin() + k);
            rel = Word(p.alphabet, rotated);
            if (test::uniform(r, 0, 1)) rel = rel.inverse();
        }
        CHECK(index_of(p, h, kStrategies[trial % 2]) == 4);
    }
}

TEST_CASE("verification rejects a corrupted table") {
    const auto p = g0_presentation();
    const std::vector<Word> h = {w(p, "xyx^-2"), w(p, "y")};
    auto t = enumerate(p, h);
    REQUIRE(verify_table(p, h, t));
    auto bad = t;
    std::swap(bad.action[0][0], bad.action[1][0]);
    CHECK_FALSE(verify_table(p, h, bad));
    bad = t;
    bad.action[2][2] = bad.action[2][2] == 0 ? 1 : 0;
    CHECK_FALSE(verify_table(p, h, bad));
    // a subgroup generator that does not fix the base coset
    CHECK_FALSE(verify_table(p, {w(p, "x")}, t));
}

TEST_CASE("presentation text") {
    const auto p = parse_presentation("generators st\nrelator s^4   # order four\nrelator (st)^3 s^-2\n");
    CHECK(p.relators.size() == 2);
    CHECK(index_of(p, {w(p, "s"), w(p, "t")}, Strategy::hlt) == 1);
    auto code = [](const char* text) {
        try {
            parse_presentation(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::io;
    };
    CHECK(code("relator x\n") == ErrorCode::parse);
    CHECK(code("generators ab\nrelator aA\n") == ErrorCode::parse);
    CHECK(code("generators ab\nrule ab\n") == ErrorCode::parse);
    CHECK(code("") == ErrorCode::parse);
    CHECK(code("generators ab\nrelator ac\n") == ErrorCode::parse);
}

TEST_CASE("permutation helpers") {
    const Permutation p = {1, 2, 0, 3};
    const Permutation q = {1, 0, 2, 3};
    CHECK(cycle_type(p) == std::vector<std::size_t>{3, 1});
    CHECK(compose(p, q) == Permutation{2, 1, 0, 3});
    CHECK(cycle_type(Permutation{}).empty());
}
