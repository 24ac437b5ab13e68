#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qecenum/code.hpp"
#include "qecenum/gf4.hpp"
#include "qecenum/rational.hpp"

namespace qecenum {

// 4^13: the full-space scan behind coset tables is quadratic in code size,
// so it gets its own (configurable) ceiling.
inline constexpr std::uint64_t kDefaultFullSpaceCap = std::uint64_t(1) << 26;

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // index = weight, 0..n

    explicit WeightDistribution(int n = 0) : counts(static_cast<size_t>(n) + 1, 0) {}

    int max_weight() const { return static_cast<int>(counts.size()) - 1; }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

inline WeightDistribution span_weight_distribution(int n, const std::vector<Gf4Vector>& basis,
                                                   std::uint64_t cap = kDefaultSpanCap) {
    WeightDistribution dist(n);
    for_each_span_element(
        n, basis, [&](const Gf4Vector& v) { ++dist.counts[static_cast<size_t>(v.weight())]; }, cap);
    return dist;
}

// Shor-Laflamme enumerators: A_m counts codewords of weight m in C, B_m in
// C^perp.
struct SlEnumerators {
    WeightDistribution a;
    WeightDistribution b;
};

inline SlEnumerators sl_enumerators(const AdditiveCode& code, std::uint64_t cap = kDefaultSpanCap) {
    return {span_weight_distribution(code.length(), code.generators(), cap),
            span_weight_distribution(code.length(), code.dual_generators(), cap)};
}

// The triangular transform taking Shor-Laflamme counts to Rains unitary
// enumerators:  M'_m = 2^-m * sum_{i<=m} C(n-i, m-i) M_i.
inline std::vector<Rational> rains_transform(const WeightDistribution& counts) {
    const int n = counts.max_weight();
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        BigInt sum = 0;
        for (int i = 0; i <= m; ++i) sum += binomial(n - i, m - i) * BigInt(counts.counts[static_cast<size_t>(i)]);
        out[static_cast<size_t>(m)] = Rational(sum, pow2(m));
    }
    return out;
}

inline Rational rains_coefficient(const WeightDistribution& counts, int m) {
    const int n = counts.max_weight();
    BigInt sum = 0;
    for (int i = 0; i <= m && i <= n; ++i)
        sum += binomial(n - i, m - i) * BigInt(counts.counts[static_cast<size_t>(i)]);
    return Rational(sum, pow2(m));
}

// Everything the closed-form metrics need, computed once per code.
struct EnumeratorSet {
    int n = 0;
    int k = 0;
    WeightDistribution a;
    WeightDistribution b;
    std::vector<Rational> a_rains;
    std::vector<Rational> b_rains;

    std::uint64_t K() const { return std::uint64_t(1) << k; }
};

inline EnumeratorSet enumerator_set(const AdditiveCode& code, std::uint64_t cap = kDefaultSpanCap) {
    EnumeratorSet e;
    e.n = code.length();
    e.k = code.dimension_k();
    auto sl = sl_enumerators(code, cap);
    e.a = std::move(sl.a);
    e.b = std::move(sl.b);
    e.a_rains = rains_transform(e.a);
    e.b_rains = rains_transform(e.b);
    return e;
}

struct SubsetEnumerators {
    Rational a;  // A'_S = 2^-|S| |{x in C : supp(x) in S}|
    Rational b;  // B'_S, same over C^perp
};

inline void check_subset(const AdditiveCode& code, std::uint32_t subset_mask) {
    if ((subset_mask & ~Gf4Vector::live_mask(code.length())) != 0)
        throw std::out_of_range("subset mask has bits outside {1..n}");
}

inline SubsetEnumerators subset_enumerators(const AdditiveCode& code, std::uint32_t subset_mask,
                                            std::uint64_t cap = kDefaultSpanCap) {
    check_subset(code, subset_mask);
    const std::uint32_t outside = ~subset_mask;
    std::uint64_t in_code = 0, in_dual = 0;
    for_each_span_element(
        code.length(), code.dual_generators(),
        [&](const Gf4Vector& v) {
            if ((v.support_mask() & outside) == 0) {
                ++in_dual;
                if (code.contains(v)) ++in_code;
            }
        },
        cap);
    const BigInt scale = pow2(std::popcount(subset_mask));
    return {Rational(BigInt(in_code), scale), Rational(BigInt(in_dual), scale)};
}

// All errors supported inside S are detectable iff B'_S = A'_S.
inline bool detectable_on_subset(const AdditiveCode& code, std::uint32_t subset_mask,
                                 std::uint64_t cap = kDefaultSpanCap) {
    const auto s = subset_enumerators(code, subset_mask, cap);
    return s.a == s.b;
}

// Minimum distance read off the Rains enumerators: the distance is at least
// d iff B'_{d-1} = A'_{d-1}, so d is the first m where they part ways.  For
// a self-dual (k = 0) code they never do and the minimum nonzero weight is
// reported, matching the [[n,0,d]] convention.
inline int distance_via_enumerators(const EnumeratorSet& e) {
    for (int m = 0; m <= e.n; ++m)
        if (e.a_rains[static_cast<size_t>(m)] != e.b_rains[static_cast<size_t>(m)]) return m;
    for (int w = 1; w <= e.n; ++w)
        if (e.a.counts[static_cast<size_t>(w)] != 0) return w;
    return e.n + 1;
}

inline int distance_via_enumerators(const AdditiveCode& code, std::uint64_t cap = kDefaultSpanCap) {
    return distance_via_enumerators(enumerator_set(code, cap));
}

// Weight distribution of every coset y + C of the code inside GF(4)^n,
// binned by (syndrome, logical class).  Syndrome bit j is y * g_j over the
// code generators; logical bit j is y * h_j over the 2k dual generators
// that extend them.  Each cell also keeps a minimum-weight representative
// (the first one met in scan order), which later serves as the recovery
// operator for that cell.
class CosetTable {
  public:
    CosetTable(int n, int k)
        : n_(n),
          k_(k),
          dist_(static_cast<size_t>(1) << (n - k + 2 * k), WeightDistribution(n)),
          rep_(dist_.size(), Gf4Vector(n)),
          rep_weight_(dist_.size(), n + 1) {}

    int length() const { return n_; }
    int dimension_k() const { return k_; }
    std::uint32_t syndrome_count() const { return 1u << (n_ - k_); }
    std::uint32_t class_count() const { return 1u << (2 * k_); }

    const WeightDistribution& at(std::uint32_t syndrome, std::uint32_t logical) const {
        return dist_[index(syndrome, logical)];
    }
    const Gf4Vector& representative(std::uint32_t syndrome, std::uint32_t logical) const {
        return rep_[index(syndrome, logical)];
    }

    void add(std::uint32_t syndrome, std::uint32_t logical, const Gf4Vector& v) {
        const size_t i = index(syndrome, logical);
        const int w = v.weight();
        ++dist_[i].counts[static_cast<size_t>(w)];
        if (w < rep_weight_[i]) {
            rep_weight_[i] = w;
            rep_[i] = v;
        }
    }

  private:
    size_t index(std::uint32_t syndrome, std::uint32_t logical) const {
        if (syndrome >= syndrome_count()) throw std::out_of_range("syndrome out of range");
        if (logical >= class_count()) throw std::out_of_range("logical class out of range");
        return (static_cast<size_t>(syndrome) << (2 * k_)) | logical;
    }

    int n_;
    int k_;
    std::vector<WeightDistribution> dist_;
    std::vector<Gf4Vector> rep_;
    std::vector<int> rep_weight_;
};

inline CosetTable coset_table(const AdditiveCode& code, std::uint64_t cap = kDefaultFullSpaceCap) {
    const int n = code.length();
    const int k = code.dimension_k();
    const std::uint64_t space = std::uint64_t(1) << (2 * n);
    if (2 * n >= 63 || space > cap) throw CapExceeded("full-space coset scan", space, cap);

    // Labels are additive, so a Gray-code walk over the 2n unit toggles
    // needs one precomputed label per toggle and one XOR per step.
    const int label_bits = n + k;  // n-k syndrome bits + 2k logical bits
    std::vector<std::uint32_t> toggle_label(static_cast<size_t>(2 * n), 0);
    const auto& duals = code.dual_generators();
    for (int t = 0; t < 2 * n; ++t) {
        const Gf4Vector unit = t < n ? Gf4Vector(n, 1u << t, 0) : Gf4Vector(n, 0, 1u << (t - n));
        std::uint32_t label = 0;
        for (int j = 0; j < label_bits; ++j) label |= unit.star(duals[static_cast<size_t>(j)]) << j;
        toggle_label[static_cast<size_t>(t)] = label;
    }

    CosetTable table(n, k);
    const std::uint32_t syndrome_mask = (1u << (n - k)) - 1u;
    std::uint32_t mu = 0, nu = 0, label = 0;
    table.add(0, 0, Gf4Vector(n));
    for (std::uint64_t i = 1; i < space; ++i) {
        const int t = std::countr_zero(i);
        if (t < n)
            mu ^= 1u << t;
        else
            nu ^= 1u << (t - n);
        label ^= toggle_label[static_cast<size_t>(t)];
        table.add(label & syndrome_mask, label >> (n - k), Gf4Vector(n, mu, nu));
    }
    return table;
}

}  // namespace qecenum
