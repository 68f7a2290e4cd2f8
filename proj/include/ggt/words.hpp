#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ggt {

/// Ordered set of generator symbols. Each symbol is a lowercase ASCII letter;
/// the matching uppercase letter denotes its inverse in the text syntax.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    const std::string& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool contains(char symbol) const;
    std::size_t index_of(char symbol) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

struct Letter {
    char gen = 0;   // lowercase symbol
    int sign = 1;   // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word over an alphabet. Immutable value; every operation
/// returns a new word.
class Word {
public:
    Word() = default;
    explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    /// Reduces the letters freely; throws if a letter is not in the alphabet.
    Word(Alphabet alphabet, const std::vector<Letter>& letters);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(int exponent) const;

    /// Lowercase for generators, uppercase for inverses, no separators.
    std::string str() const;

    bool operator==(const Word&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// Cancels adjacent g g^-1 pairs until none remain.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

/// Parses the word syntax: lowercase = generator, uppercase = inverse,
/// `^k`, `^-k` or `^{-k}` after a letter or parenthesised group repeats it,
/// whitespace is ignored.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Substitution homomorphism from one alphabet to another.
class GenMap {
public:
    GenMap(Alphabet domain, Alphabet target, std::map<char, Word> images);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& target() const { return target_; }
    const Word& image(char gen) const { return images_.at(gen); }

private:
    Alphabet domain_;
    Alphabet target_;
    std::map<char, Word> images_;
};

Word substitute(const Word& word, const GenMap& map);

namespace alphabets {
/// Artin generators a, b, c of the braid group on four strands.
const Alphabet& b4();
/// x, y of the central quotient.
const Alphabet& g0();
/// s, t standing for the matrices S, T of SL2(Z).
const Alphabet& sl2();
}  // namespace alphabets

/// x -> bac, y -> xc = bacc.
const GenMap& g0_to_b4();

}  // namespace ggt
