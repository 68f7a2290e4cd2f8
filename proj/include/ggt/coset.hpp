#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/words.hpp"

namespace ggt::coset {

struct Presentation {
    std::string name;
    Alphabet alphabet;
    std::vector<Word> relators;  // freely reduced, nonempty
};

/// <x, y | x^4, y^3, x y x^2 y^-1 x^-1 y^-1 x^-2 y>
Presentation g0_presentation();
/// <s, t | s^4, (st)^3 s^-2>, s and t standing for S and T.
Presentation sl2z_presentation();
/// "G0" or "SL2Z" (case-insensitive).
Presentation fixture(std::string_view name);

/// Line-based text: `generators <letters>` then any number of
/// `relator <word>` lines; `#` starts a comment.
Presentation parse_presentation(std::string_view text);

enum class Strategy { hlt, felsch };
enum class Status { complete, overflow };

const char* to_string(Strategy strategy);

inline constexpr std::size_t kDefaultCap = 100000;

/// Coset table after compaction. Column 2g is generator g, column 2g+1 its
/// inverse; cosets are 0-based with coset 0 = the subgroup itself.
struct CosetTable {
    Alphabet alphabet;
    Status status = Status::complete;
    std::size_t count = 0;         // live cosets
    std::size_t defined = 0;       // cosets ever defined (table size before compaction)
    std::vector<std::vector<std::size_t>> action;  // [coset][column], complete tables only
};

/// Todd-Coxeter enumeration of the cosets of <subgens> in the presented group.
/// Overflow (more than `cap` cosets defined) is reported in the status, it
/// says nothing about the index being infinite.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgens, std::size_t cap = kDefaultCap,
                     Strategy strategy = Strategy::hlt);

/// Independent check of a completed table: every column a permutation with
/// its inverse column, every relator closed at every coset, every subgroup
/// generator fixing coset 0, action transitive.
bool verify_table(const Presentation& p, const std::vector<Word>& subgens, const CosetTable& t);

using Permutation = std::vector<std::size_t>;

/// One permutation of {0..count-1} per generator, in alphabet order.
std::vector<Permutation> permutation_image(const CosetTable& t);

Permutation compose(const Permutation& outer, const Permutation& inner);
/// Image of a word, acting on cosets from the right: coset . w.
Permutation evaluate(const std::vector<Permutation>& image, const Word& w);
/// Cycle lengths, fixed points included, sorted decreasingly.
std::vector<std::size_t> cycle_type(const Permutation& p);

}  // namespace ggt::coset
