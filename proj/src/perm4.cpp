#include "ggt/perm4.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

Perm4::Perm4(std::array<std::uint8_t, 4> images) : images_(images) {
    std::array<bool, 4> seen{};
    for (auto v : images_) {
        if (v > 3 || seen[v]) throw Error(ErrorCode::invalid_argument, "not a permutation of {1,2,3,4}");
        seen[v] = true;
    }
}

Perm4 Perm4::adjacent(int i) {
    std::array<std::uint8_t, 4> im{0, 1, 2, 3};
    std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i + 1)]);
    return Perm4(im);
}

Perm4 Perm4::reversal() { return Perm4({3, 2, 1, 0}); }

Perm4 Perm4::operator*(const Perm4& rhs) const {
    std::array<std::uint8_t, 4> im{};
    for (int i = 0; i < 4; ++i) im[static_cast<std::size_t>(i)] = (*this)(rhs(i));
    return Perm4(im);
}

Perm4 Perm4::inverse() const {
    std::array<std::uint8_t, 4> im{};
    for (std::uint8_t i = 0; i < 4; ++i) im[images_[i]] = i;
    return Perm4(im);
}

int Perm4::length() const {
    int n = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++n;
    return n;
}

int Perm4::order() const {
    const auto type = cycle_type();
    return std::accumulate(type.begin(), type.end(), 1, [](int acc, int len) { return len == 0 ? acc : std::lcm(acc, len); });
}

std::array<int, 4> Perm4::cycle_type() const {
    std::array<int, 4> type{};
    std::array<bool, 4> seen{};
    std::size_t n = 0;
    for (int start = 0; start < 4; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        for (int p = start; !seen[static_cast<std::size_t>(p)]; p = (*this)(p)) {
            seen[static_cast<std::size_t>(p)] = true;
            ++len;
        }
        type[n++] = len;
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

int Perm4::index() const {
    // Lehmer code
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 4; ++j)
            if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
        idx = idx * (4 - i) + smaller;
    }
    return idx;
}

Perm4 Perm4::from_index(int index) {
    if (index < 0 || index >= 24) throw Error(ErrorCode::invalid_argument, "permutation index out of range");
    std::array<int, 4> code{};
    for (int i = 3; i >= 0; --i) {
        code[static_cast<std::size_t>(i)] = index % (4 - i);
        index /= (4 - i);
    }
    std::vector<std::uint8_t> pool{0, 1, 2, 3};
    std::array<std::uint8_t, 4> im{};
    for (std::size_t i = 0; i < 4; ++i) {
        im[i] = pool[static_cast<std::size_t>(code[i])];
        pool.erase(pool.begin() + code[i]);
    }
    return Perm4(im);
}

std::string Perm4::one_line() const {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ' ';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

std::string Perm4::cycles() const {
    std::string out;
    std::array<bool, 4> seen{};
    for (int start = 0; start < 4; ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        out += '(';
        for (int p = start; !seen[static_cast<std::size_t>(p)]; p = (*this)(p)) {
            if (p != start) out += ' ';
            out += std::to_string(p + 1);
            seen[static_cast<std::size_t>(p)] = true;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace ggt
