#include "ggt/words.hpp"

#include <cctype>

#include "ggt/error.hpp"

namespace ggt {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const char s = symbols_[i];
        if (!std::islower(static_cast<unsigned char>(s)))
            throw Error(ErrorCode::invalid_argument,
                        std::string("generator symbols must be lowercase letters, got '") + s + "'");
        if (symbols_.find(s) != i)
            throw Error(ErrorCode::invalid_argument, std::string("duplicate generator '") + s + "'");
    }
}

bool Alphabet::contains(char symbol) const {
    return symbols_.find(symbol) != std::string::npos;
}

std::size_t Alphabet::index_of(char symbol) const {
    const auto pos = symbols_.find(symbol);
    if (pos == std::string::npos)
        throw Error(ErrorCode::alphabet_mismatch,
                    std::string("generator '") + symbol + "' not in alphabet {" + symbols_ + "}");
    return pos;
}

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word::Word(Alphabet alphabet, const std::vector<Letter>& letters)
    : alphabet_(std::move(alphabet)), letters_(free_reduce(letters)) {
    for (const Letter& l : letters_) {
        if (l.sign != 1 && l.sign != -1) throw Error(ErrorCode::invalid_argument, "letter sign must be +-1");
        alphabet_.index_of(l.gen);
    }
}

Word Word::inverse() const {
    Word out(alphabet_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
}

Word Word::operator*(const Word& rhs) const {
    if (!(alphabet_ == rhs.alphabet_))
        throw Error(ErrorCode::alphabet_mismatch, "cannot concatenate words over {" + alphabet_.symbols() +
                                                      "} and {" + rhs.alphabet_.symbols() + "}");
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    Word out(alphabet_);
    out.letters_ = free_reduce(joined);
    return out;
}

Word Word::pow(int exponent) const {
    const Word base = exponent < 0 ? inverse() : *this;
    Word out(alphabet_);
    for (int i = 0; i < std::abs(exponent); ++i) out = out * base;
    return out;
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_)
        out.push_back(l.sign > 0 ? l.gen : static_cast<char>(std::toupper(static_cast<unsigned char>(l.gen))));
    return out;
}

namespace {

class WordParser {
public:
    WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    std::vector<Letter> parse() {
        auto out = sequence();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    std::vector<Letter> sequence() {
        std::vector<Letter> out;
        for (;;) {
            skip_space();
            if (pos_ == text_.size() || text_[pos_] == ')') return out;
            auto atom = this->atom();
            const int k = exponent();
            append_power(out, atom, k);
        }
    }

    std::vector<Letter> atom() {
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            auto inner = sequence();
            if (pos_ == text_.size() || text_[pos_] != ')') fail("unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch))) fail("unexpected '" + std::string(1, ch) + "'");
        ++pos_;
        const char gen = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (!alphabet_.contains(gen))
            fail("unknown letter '" + std::string(1, ch) + "' for alphabet {" + alphabet_.symbols() + "}");
        return {Letter{gen, std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1}};
    }

    int exponent() {
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_space();
        bool braced = false;
        if (pos_ < text_.size() && text_[pos_] == '{') {
            braced = true;
            ++pos_;
        }
        int sign = 1;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        if (pos_ == start) fail("malformed exponent");
        if (braced) {
            if (pos_ == text_.size() || text_[pos_] != '}') fail("malformed exponent: missing '}'");
            ++pos_;
        }
        return sign * static_cast<int>(value);
    }

    static void append_power(std::vector<Letter>& out, const std::vector<Letter>& atom, int k) {
        std::vector<Letter> base = atom;
        if (k < 0) {
            base.clear();
            for (auto it = atom.rbegin(); it != atom.rend(); ++it) base.push_back(it->inverse());
            k = -k;
        }
        for (int i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::parse, "word '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    return Word(alphabet, WordParser(text, alphabet).parse());
}

GenMap::GenMap(Alphabet domain, Alphabet target, std::map<char, Word> images)
    : domain_(std::move(domain)), target_(std::move(target)), images_(std::move(images)) {
    for (char g : domain_.symbols()) {
        auto it = images_.find(g);
        if (it == images_.end())
            throw Error(ErrorCode::invalid_argument, std::string("substitution has no image for '") + g + "'");
        if (!(it->second.alphabet() == target_))
            throw Error(ErrorCode::alphabet_mismatch, std::string("image of '") + g + "' is not over the target alphabet");
    }
    if (images_.size() != domain_.size())
        throw Error(ErrorCode::invalid_argument, "substitution maps generators outside its domain");
}

Word substitute(const Word& word, const GenMap& map) {
    if (!(word.alphabet() == map.domain()))
        throw Error(ErrorCode::alphabet_mismatch, "word over {" + word.alphabet().symbols() +
                                                      "} substituted with a map from {" + map.domain().symbols() + "}");
    std::vector<Letter> out;
    for (const Letter& l : word.letters()) {
        const Word& image = map.image(l.gen);
        const Word piece = l.sign > 0 ? image : image.inverse();
        out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    }
    return Word(map.target(), out);
}

namespace alphabets {
const Alphabet& b4() {
    static const Alphabet a("abc");
    return a;
}
const Alphabet& g0() {
    static const Alphabet a("xy");
    return a;
}
const Alphabet& sl2() {
    static const Alphabet a("st");
    return a;
}
}  // namespace alphabets

const GenMap& g0_to_b4() {
    static const GenMap map(alphabets::g0(), alphabets::b4(),
                            {{'x', parse_word("bac", alphabets::b4())}, {'y', parse_word("bacc", alphabets::b4())}});
    return map;
}

}  // namespace ggt
