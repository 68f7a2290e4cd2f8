#include "ggt/coset.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt::coset {

Presentation g0_presentation() {
    const Alphabet& a = alphabets::g0();
    return {"G0", a, {parse_word("x^4", a), parse_word("y^3", a), parse_word("x y x^2 Y X Y x^-2 y", a)}};
}

Presentation sl2z_presentation() {
    const Alphabet& a = alphabets::sl2();
    return {"SL2Z", a, {parse_word("s^4", a), parse_word("(st)^3 s^-2", a)}};
}

Presentation fixture(std::string_view name) {
    std::string upper(name);
    for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "G0") return g0_presentation();
    if (upper == "SL2Z") return sl2z_presentation();
    throw Error(ErrorCode::unknown_name, "unknown presentation fixture '" + std::string(name) + "'");
}

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    p.name = "custom";
    bool have_generators = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;
        std::string rest;
        std::getline(fields, rest);
        if (keyword == "generators") {
            std::string symbols;
            for (char ch : rest)
                if (!std::isspace(static_cast<unsigned char>(ch))) symbols.push_back(ch);
            p.alphabet = Alphabet(symbols);
            have_generators = true;
        } else if (keyword == "relator") {
            if (!have_generators)
                throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": relator before generators");
            Word r = parse_word(rest, p.alphabet);
            if (r.empty()) throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": trivial relator");
            p.relators.push_back(std::move(r));
        } else if (keyword == "name") {
            p.name = rest.substr(rest.find_first_not_of(' ') == std::string::npos ? 0 : rest.find_first_not_of(' '));
        } else {
            throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
        }
    }
    if (!have_generators) throw Error(ErrorCode::parse, "presentation has no generators line");
    return p;
}

const char* to_string(Strategy strategy) {
    return strategy == Strategy::hlt ? "HLT" : "Felsch";
}

namespace {

constexpr int kUndefined = -1;

struct Overflow {};

using Columns = std::vector<int>;

Columns to_columns(const Word& w, const Alphabet& alphabet) {
    if (!(w.alphabet() == alphabet))
        throw Error(ErrorCode::alphabet_mismatch,
                    "word over {" + w.alphabet().symbols() + "} used with presentation over {" + alphabet.symbols() + "}");
    Columns out;
    for (const Letter& l : w.letters()) out.push_back(static_cast<int>(2 * alphabet.index_of(l.gen)) + (l.sign > 0 ? 0 : 1));
    return out;
}

inline int inv(int column) { return column ^ 1; }

class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgens, std::size_t cap)
        : ncols_(static_cast<int>(2 * p.alphabet.size())), cap_(cap) {
        for (const Word& r : p.relators) relators_.push_back(to_columns(r, p.alphabet));
        for (const Word& w : subgens) subgens_.push_back(to_columns(w, p.alphabet));
        // cyclic conjugates of relators and their inverses, by first column
        conjugates_.resize(static_cast<std::size_t>(ncols_));
        for (const Columns& r : relators_) {
            Columns rinv;
            for (auto it = r.rbegin(); it != r.rend(); ++it) rinv.push_back(inv(*it));
            for (const Columns* base : {&r, static_cast<const Columns*>(&rinv)}) {
                for (std::size_t k = 0; k < base->size(); ++k) {
                    Columns rot(base->begin() + static_cast<std::ptrdiff_t>(k), base->end());
                    rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(k));
                    auto& bucket = conjugates_[static_cast<std::size_t>(rot.front())];
                    if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
                }
            }
        }
        new_coset();
    }

    CosetTable run(Strategy strategy) {
        try {
            if (strategy == Strategy::hlt)
                hlt();
            else
                felsch();
        } catch (const Overflow&) {
            CosetTable t;
            t.status = Status::overflow;
            t.count = live_count();
            t.defined = table_.size();
            return t;
        }
        return compact();
    }

private:
    void hlt() {
        for (const Columns& w : subgens_) {
            scan_and_fill(0, w);
            process_deductions();
        }
        for (std::size_t c = 0; c < table_.size(); ++c) {
            for (const Columns& r : relators_) {
                if (!alive(c)) break;
                scan_and_fill(c, r);
                process_deductions();
            }
            for (int x = 0; x < ncols_ && alive(c); ++x) {
                if (table_[c][static_cast<std::size_t>(x)] == kUndefined) {
                    define(c, x);
                    process_deductions();
                }
            }
        }
    }

    void felsch() {
        for (const Columns& w : subgens_) {
            scan_and_fill(0, w);
            process_deductions();
        }
        for (std::size_t c = 0; c < table_.size(); ++c) {
            for (int x = 0; x < ncols_ && alive(c); ++x) {
                if (table_[c][static_cast<std::size_t>(x)] == kUndefined) {
                    define(c, x);
                    process_deductions();
                }
            }
        }
    }

    std::size_t new_coset() {
        if (table_.size() >= cap_) throw Overflow{};
        table_.emplace_back(static_cast<std::size_t>(ncols_), kUndefined);
        parent_.push_back(table_.size() - 1);
        return table_.size() - 1;
    }

    void set(std::size_t c, int x, std::size_t d) {
        table_[c][static_cast<std::size_t>(x)] = static_cast<int>(d);
        table_[d][static_cast<std::size_t>(inv(x))] = static_cast<int>(c);
        deductions_.emplace_back(c, x);
    }

    void define(std::size_t c, int x) { set(c, x, new_coset()); }

    bool alive(std::size_t c) const { return parent_[c] == c; }

    std::size_t rep(std::size_t c) {
        std::size_t root = c;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[c] != root) {
            const std::size_t next = parent_[c];
            parent_[c] = root;
            c = next;
        }
        return root;
    }

    int entry(std::size_t c, int x) const { return table_[c][static_cast<std::size_t>(x)]; }

    // Returns false when the scan stopped at a gap longer than one letter.
    bool scan(std::size_t c, const Columns& w, bool fill) {
        std::size_t f = c;
        std::size_t b = c;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
                f = static_cast<std::size_t>(entry(f, w[static_cast<std::size_t>(i)]));
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) != kUndefined) {
                b = static_cast<std::size_t>(entry(b, inv(w[static_cast<std::size_t>(j)])));
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                set(f, w[static_cast<std::size_t>(i)], b);
                return true;
            }
            if (!fill) return false;
            define(f, w[static_cast<std::size_t>(i)]);
        }
    }

    void scan_and_fill(std::size_t c, const Columns& w) { scan(c, w, true); }

    void process_deductions() {
        while (!deductions_.empty()) {
            const auto [c, x] = deductions_.back();
            deductions_.pop_back();
            if (!alive(c)) continue;
            for (const Columns& r : conjugates_[static_cast<std::size_t>(x)]) {
                scan(c, r, false);
                if (!alive(c)) break;
            }
            const int d = alive(c) ? entry(c, x) : kUndefined;
            if (d != kUndefined && alive(static_cast<std::size_t>(d))) {
                for (const Columns& r : conjugates_[static_cast<std::size_t>(inv(x))]) {
                    scan(static_cast<std::size_t>(d), r, false);
                    if (!alive(static_cast<std::size_t>(d))) break;
                }
            }
            for (const Columns& w : subgens_) scan(0, w, false);
        }
    }

    void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::size_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            const std::size_t e = queue.front();
            queue.pop_front();
            for (int x = 0; x < ncols_; ++x) {
                const int fe = entry(e, x);
                if (fe == kUndefined) continue;
                const std::size_t f = static_cast<std::size_t>(fe);
                table_[f][static_cast<std::size_t>(inv(x))] = kUndefined;
                const std::size_t e1 = rep(e);
                const std::size_t f1 = rep(f);
                if (entry(e1, x) != kUndefined)
                    merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
                else if (entry(f1, inv(x)) != kUndefined)
                    merge(e1, static_cast<std::size_t>(entry(f1, inv(x))), queue);
                else
                    set(e1, x, f1);
            }
        }
    }

    std::size_t live_count() const {
        std::size_t n = 0;
        for (std::size_t c = 0; c < table_.size(); ++c) n += alive(c) ? 1 : 0;
        return n;
    }

    CosetTable compact() {
        CosetTable t;
        t.defined = table_.size();
        std::vector<std::size_t> index(table_.size(), 0);
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (alive(c)) index[c] = t.count++;
        t.action.reserve(t.count);
        for (std::size_t c = 0; c < table_.size(); ++c) {
            if (!alive(c)) continue;
            std::vector<std::size_t> row;
            for (int x = 0; x < ncols_; ++x) {
                const int d = entry(c, x);
                if (d == kUndefined) throw Error(ErrorCode::invalid_argument, "coset enumeration left an undefined entry");
                row.push_back(index[rep(static_cast<std::size_t>(d))]);
            }
            t.action.push_back(std::move(row));
        }
        return t;
    }

    int ncols_;
    std::size_t cap_;
    std::vector<Columns> relators_;
    std::vector<Columns> subgens_;
    std::vector<std::vector<Columns>> conjugates_;
    std::vector<std::vector<int>> table_;
    std::vector<std::size_t> parent_;
    std::vector<std::pair<std::size_t, int>> deductions_;
};

}  // namespace

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgens, std::size_t cap, Strategy strategy) {
    if (cap == 0) throw Error(ErrorCode::invalid_argument, "coset cap must be positive");
    for (const Word& r : p.relators)
        if (r.empty()) throw Error(ErrorCode::invalid_argument, "presentation has an empty relator");
    CosetTable t = Enumerator(p, subgens, cap).run(strategy);
    t.alphabet = p.alphabet;
    return t;
}

bool verify_table(const Presentation& p, const std::vector<Word>& subgens, const CosetTable& t) {
    if (t.status != Status::complete || t.count == 0 || t.action.size() != t.count) return false;
    if (!(t.alphabet == p.alphabet)) return false;
    const std::size_t ncols = 2 * p.alphabet.size();
    for (const auto& row : t.action) {
        if (row.size() != ncols) return false;
        for (std::size_t d : row)
            if (d >= t.count) return false;
    }
    for (std::size_t c = 0; c < t.count; ++c)
        for (std::size_t x = 0; x < ncols; ++x)
            if (t.action[t.action[c][x]][x ^ 1] != c) return false;

    auto trace = [&](std::size_t c, const Word& w) {
        for (const Letter& l : w.letters()) c = t.action[c][2 * p.alphabet.index_of(l.gen) + (l.sign > 0 ? 0 : 1)];
        return c;
    };
    for (const Word& r : p.relators)
        for (std::size_t c = 0; c < t.count; ++c)
            if (trace(c, r) != c) return false;
    for (const Word& w : subgens)
        if (!(w.alphabet() == p.alphabet) || trace(0, w) != 0) return false;

    std::vector<bool> seen(t.count, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        for (std::size_t d : t.action[c]) {
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                stack.push_back(d);
            }
        }
    }
    return reached == t.count;
}

std::vector<Permutation> permutation_image(const CosetTable& t) {
    if (t.status != Status::complete) throw Error(ErrorCode::invalid_argument, "permutation image of an incomplete table");
    std::vector<Permutation> out(t.alphabet.size(), Permutation(t.count));
    for (std::size_t g = 0; g < t.alphabet.size(); ++g)
        for (std::size_t c = 0; c < t.count; ++c) out[g][c] = t.action[c][2 * g];
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

Permutation evaluate(const std::vector<Permutation>& image, const Word& w) {
    if (image.empty()) throw Error(ErrorCode::invalid_argument, "empty permutation image");
    const std::size_t n = image.front().size();
    Permutation out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    for (const Letter& l : w.letters()) {
        const Permutation& g = image.at(w.alphabet().index_of(l.gen));
        Permutation step = g;
        if (l.sign < 0)
            for (std::size_t i = 0; i < n; ++i) step[g[i]] = i;
        out = compose(step, out);  // right action: apply letters left to right
    }
    return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<std::size_t> type;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t q = s; !seen[q]; q = p[q]) {
            seen[q] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

}  // namespace ggt::coset
