#pragma once

// Test-only reference implementation of GF(4) arithmetic and code
// enumeration, written against the field definition with explicit tables
// and symbol arrays.  It shares no code with the bit-packed library path
// and exists so the two can be compared on small codes.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace naive {

// Symbols by index: 0, 1, w, W  (W = w^2 = 1 + w).
inline constexpr int kZero = 0, kOne = 1, kOmega = 2, kOmegaBar = 3;

// Addition from W = 1 + w:  e.g. w + W = 1, 1 + w = W.
inline constexpr std::array<std::array<int, 4>, 4> kAdd = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

// Multiplication from w^2 = W, w^3 = 1.
inline constexpr std::array<std::array<int, 4>, 4> kMul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

inline constexpr std::array<int, 4> kConj = {0, 1, 3, 2};   // swaps w and W
inline constexpr std::array<int, 4> kTrace = {0, 0, 1, 1};  // Tr(x) = x + x^2

using Vec = std::vector<int>;

inline Vec from_string(const std::string& s) {
    Vec v;
    for (char c : s) {
        switch (c) {
            case '0': v.push_back(kZero); break;
            case '1': v.push_back(kOne); break;
            case 'w': v.push_back(kOmega); break;
            case 'W': v.push_back(kOmegaBar); break;
            default: throw std::invalid_argument("bad naive symbol");
        }
    }
    return v;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = kAdd[a[i]][b[i]];
    return r;
}

// Literal trace inner product sum_i Tr(x_i * conj(y_i)).
inline int star(const Vec& a, const Vec& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s ^= kTrace[kMul[a[i]][kConj[b[i]]]];
    return s;
}

inline int weight(const Vec& v) {
    int w = 0;
    for (int x : v)
        if (x != kZero) ++w;
    return w;
}

// Every element of the additive span of the rows, by summing subsets.
inline std::vector<Vec> span(const std::vector<Vec>& rows, size_t n) {
    std::vector<Vec> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << rows.size()); ++mask) {
        Vec v(n, kZero);
        for (size_t j = 0; j < rows.size(); ++j)
            if ((mask >> j) & 1u) v = add(v, rows[j]);
        out.push_back(v);
    }
    return out;
}

inline std::vector<std::uint64_t> weight_counts(const std::vector<Vec>& elems, size_t n) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& v : elems) ++counts[static_cast<size_t>(weight(v))];
    return counts;
}

// |{x in elems : supp(x) inside subset}|, subset given as an index mask.
inline std::uint64_t count_supported(const std::vector<Vec>& elems, std::uint32_t subset_mask) {
    std::uint64_t count = 0;
    for (const auto& v : elems) {
        bool inside = true;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != kZero && !((subset_mask >> i) & 1u)) inside = false;
        if (inside) ++count;
    }
    return count;
}

// Weight distribution of every coset of the span inside GF(4)^n, keyed by
// a canonical coset representative (the lexicographically least element).
inline std::map<Vec, std::vector<std::uint64_t>> coset_distributions(const std::vector<Vec>& rows,
                                                                     size_t n) {
    const auto code = span(rows, n);
    std::map<Vec, std::vector<std::uint64_t>> out;
    Vec v(n, kZero);
    const std::uint64_t total = std::uint64_t(1) << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        for (size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(rem & 3u);
            rem >>= 2;
        }
        Vec leader = v;
        for (const auto& c : code) leader = std::min(leader, add(v, c));
        auto [it, inserted] = out.try_emplace(leader, std::vector<std::uint64_t>(n + 1, 0));
        ++it->second[static_cast<size_t>(weight(v))];
    }
    return out;
}

}  // namespace naive
