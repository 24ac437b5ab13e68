#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qecenum/code.hpp"
#include "qecenum/enumerators.hpp"
#include "qecenum/rational.hpp"

namespace qecenum {

template <class Scalar>
Scalar scalar_from(const Rational& r) {
    return static_cast<Scalar>(r);
}
template <>
inline double scalar_from<double>(const Rational& r) {
    return to_double(r);
}

namespace detail {

// p^m (1-p)^(n-m) for m = 0..n.
template <class Scalar>
std::vector<Scalar> bernoulli_weights(int n, const Scalar& p) {
    const Scalar q = Scalar(1) - p;
    std::vector<Scalar> ppow(static_cast<size_t>(n) + 1), qpow(static_cast<size_t>(n) + 1);
    ppow[0] = Scalar(1);
    qpow[0] = Scalar(1);
    for (int i = 1; i <= n; ++i) {
        ppow[static_cast<size_t>(i)] = ppow[static_cast<size_t>(i) - 1] * p;
        qpow[static_cast<size_t>(i)] = qpow[static_cast<size_t>(i) - 1] * q;
    }
    std::vector<Scalar> w(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        w[static_cast<size_t>(m)] = ppow[static_cast<size_t>(m)] * qpow[static_cast<size_t>(n - m)];
    return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Error detection: transmission rate T^d, fidelity F^d, failure rate.
// ---------------------------------------------------------------------------

// T^d_S = 2^-|S| B'_S: the probability that a random depolarizing error on
// qubits S goes undetected by the code-space measurement.
inline Rational td_subset(const AdditiveCode& code, std::uint32_t subset_mask,
                          std::uint64_t cap = kDefaultSpanCap) {
    const auto s = subset_enumerators(code, subset_mask, cap);
    return s.b / Rational(pow2(std::popcount(subset_mask)));
}

inline Rational td_m(const EnumeratorSet& e, int m) {
    return e.b_rains[static_cast<size_t>(m)] / (Rational(binomial(e.n, m)) * Rational(pow2(m)));
}

template <class Scalar>
Scalar td_p(const EnumeratorSet& e, const Scalar& p) {
    const auto w = detail::bernoulli_weights(e.n, p);
    Scalar sum{0};
    Scalar inv2m{1};
    const Scalar half = Scalar(1) / Scalar(2);
    for (int m = 0; m <= e.n; ++m) {
        sum += w[static_cast<size_t>(m)] * inv2m * scalar_from<Scalar>(e.b_rains[static_cast<size_t>(m)]);
        inv2m *= half;
    }
    return sum;
}

// F^d_S = (K A'_S + B'_S) / ((K+1) B'_S): average fidelity of accepted
// states.
inline Rational fd_from_subset(const SubsetEnumerators& s, std::uint64_t K) {
    return (Rational(K) * s.a + s.b) / (Rational(K + 1) * s.b);
}

inline Rational fd_subset(const AdditiveCode& code, std::uint32_t subset_mask,
                          std::uint64_t cap = kDefaultSpanCap) {
    return fd_from_subset(subset_enumerators(code, subset_mask, cap),
                          std::uint64_t(1) << code.dimension_k());
}

inline Rational fd_m(const EnumeratorSet& e, int m) {
    const Rational& a = e.a_rains[static_cast<size_t>(m)];
    const Rational& b = e.b_rains[static_cast<size_t>(m)];
    return (Rational(e.K()) * a + b) / (Rational(e.K() + 1) * b);
}

template <class Scalar>
Scalar fd_p(const EnumeratorSet& e, const Scalar& p) {
    const auto w = detail::bernoulli_weights(e.n, p);
    const Scalar K = Scalar(e.K());
    Scalar numer{0}, denom{0};
    Scalar inv2m{1};
    const Scalar half = Scalar(1) / Scalar(2);
    for (int m = 0; m <= e.n; ++m) {
        const Scalar a = scalar_from<Scalar>(e.a_rains[static_cast<size_t>(m)]);
        const Scalar b = scalar_from<Scalar>(e.b_rains[static_cast<size_t>(m)]);
        numer += w[static_cast<size_t>(m)] * inv2m * (K * a + b);
        denom += w[static_cast<size_t>(m)] * inv2m * b;
        inv2m *= half;
    }
    return numer / ((K + Scalar(1)) * denom);
}

// Failure rate under detection: accepted but wrong, T^d (1 - F^d).
inline Rational failure_detect_subset(const AdditiveCode& code, std::uint32_t subset_mask,
                                      std::uint64_t cap = kDefaultSpanCap) {
    const auto s = subset_enumerators(code, subset_mask, cap);
    const std::uint64_t K = std::uint64_t(1) << code.dimension_k();
    return Rational(K) * (s.b - s.a) /
           (Rational(K + 1) * Rational(pow2(std::popcount(subset_mask))));
}

inline Rational failure_detect_m(const EnumeratorSet& e, int m) {
    const Rational diff = e.b_rains[static_cast<size_t>(m)] - e.a_rains[static_cast<size_t>(m)];
    return Rational(e.K()) * diff /
           (Rational(e.K() + 1) * Rational(binomial(e.n, m)) * Rational(pow2(m)));
}

// Failure rate as the Rains-enumerator sum T^d_p (1 - F^d_p).
template <class Scalar>
Scalar failure_detect_p_rains(const EnumeratorSet& e, const Scalar& p) {
    const auto w = detail::bernoulli_weights(e.n, p);
    Scalar sum{0};
    Scalar inv2m{1};
    const Scalar half = Scalar(1) / Scalar(2);
    for (int m = 0; m <= e.n; ++m) {
        const Rational diff = e.b_rains[static_cast<size_t>(m)] - e.a_rains[static_cast<size_t>(m)];
        sum += w[static_cast<size_t>(m)] * inv2m * scalar_from<Scalar>(diff);
        inv2m *= half;
    }
    return sum * Scalar(e.K()) / Scalar(e.K() + 1);
}

// The same failure rate collapsed onto the Shor-Laflamme counts,
//   K/(K+1) sum_i (p/4)^i (1 - 3p/4)^(n-i) [B_i - A_i],
// a sum of nonnegative terms, so it keeps full relative accuracy at small p.
template <class Scalar>
Scalar failure_detect_p(const EnumeratorSet& e, const Scalar& p) {
    const Scalar quarter = p / Scalar(4);
    const Scalar rest = Scalar(1) - Scalar(3) * p / Scalar(4);
    Scalar sum{0};
    Scalar qpow{1};
    std::vector<Scalar> rpow(static_cast<size_t>(e.n) + 1);
    rpow[0] = Scalar(1);
    for (int i = 1; i <= e.n; ++i) rpow[static_cast<size_t>(i)] = rpow[static_cast<size_t>(i) - 1] * rest;
    for (int i = 0; i <= e.n; ++i) {
        const std::uint64_t diff = e.b.counts[static_cast<size_t>(i)] - e.a.counts[static_cast<size_t>(i)];
        if (diff != 0) sum += qpow * rpow[static_cast<size_t>(e.n - i)] * Scalar(diff);
        qpow *= quarter;
    }
    return sum * Scalar(e.K()) / Scalar(e.K() + 1);
}

struct SmallPCoefficient {
    int d = 0;    // leading power of p in the failure rate
    Rational c;   // leading coefficient
};

// Detection: failure ~ c p^d with c = K (B_d - A_d) / ((K+1) 4^d).
inline SmallPCoefficient small_p_c(const EnumeratorSet& e, int d) {
    const std::uint64_t diff = e.b.counts[static_cast<size_t>(d)] - e.a.counts[static_cast<size_t>(d)];
    return {d, Rational(e.K()) * Rational(diff) / (Rational(e.K() + 1) * Rational(pow2(2 * d)))};
}

inline SmallPCoefficient small_p_c(const AdditiveCode& code, std::uint64_t cap = kDefaultSpanCap) {
    return small_p_c(enumerator_set(code, cap), parameters(code, cap).d);
}

// ---------------------------------------------------------------------------
// Error correction: fidelity F^c with per-syndrome recovery maximization.
// ---------------------------------------------------------------------------

// F^c_S = F^d_S: the optimal recovery for a known error location does no
// better than detection's post-selection.  Exposed under its own name so
// the dense oracle can exercise the equality against explicit recoveries.
inline Rational fc_subset(const AdditiveCode& code, std::uint32_t subset_mask,
                          std::uint64_t cap = kDefaultSpanCap) {
    return fd_subset(code, subset_mask, cap);
}

// One logical class per syndrome.
using RecoveryChoice = std::vector<std::uint32_t>;

inline void check_recovery(const CosetTable& table, const RecoveryChoice& recovery) {
    if (recovery.size() != table.syndrome_count())
        throw std::invalid_argument("recovery map covers " + std::to_string(recovery.size()) +
                                    " syndromes, need " + std::to_string(table.syndrome_count()));
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s)
        if (recovery[s] >= table.class_count())
            throw std::invalid_argument("recovery map assigns invalid class " +
                                        std::to_string(recovery[s]) + " to syndrome " + std::to_string(s));
}

// F^c_m = 1/(K+1) + m!(n-m)! K / (n! 2^m (K+1)) * sum_s max_L A'_m(s, L),
// with the maximization free per (syndrome, m).
inline Rational fc_m(const CosetTable& table, int m) {
    const int n = table.length();
    const std::uint64_t K = std::uint64_t(1) << table.dimension_k();
    Rational total = 0;
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        Rational best = rains_coefficient(table.at(s, 0), m);
        for (std::uint32_t L = 1; L < table.class_count(); ++L)
            best = std::max(best, rains_coefficient(table.at(s, L), m));
        total += best;
    }
    return Rational(1, K + 1) +
           Rational(K) * total / (Rational(K + 1) * Rational(binomial(n, m)) * Rational(pow2(m)));
}

// Same, but with the recovery class pinned per syndrome.
inline Rational fc_m_restricted(const CosetTable& table, int m, const RecoveryChoice& recovery) {
    check_recovery(table, recovery);
    const int n = table.length();
    const std::uint64_t K = std::uint64_t(1) << table.dimension_k();
    Rational total = 0;
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s)
        total += rains_coefficient(table.at(s, recovery[s]), m);
    return Rational(1, K + 1) +
           Rational(K) * total / (Rational(K + 1) * Rational(binomial(n, m)) * Rational(pow2(m)));
}

// Per-class objective in F^c_p:
//   sum_m p^m (1-p)^(n-m) 2^-m A'_m(coset)  =  sum_i (p/4)^i (1-3p/4)^(n-i) A_i(coset),
// evaluated in the collapsed right-hand form.
template <class Scalar>
Scalar coset_objective(const WeightDistribution& dist, const Scalar& p) {
    const int n = dist.max_weight();
    const Scalar quarter = p / Scalar(4);
    const Scalar rest = Scalar(1) - Scalar(3) * p / Scalar(4);
    std::vector<Scalar> rpow(static_cast<size_t>(n) + 1);
    rpow[0] = Scalar(1);
    for (int i = 1; i <= n; ++i) rpow[static_cast<size_t>(i)] = rpow[static_cast<size_t>(i) - 1] * rest;
    Scalar sum{0};
    Scalar qpow{1};
    for (int i = 0; i <= n; ++i) {
        if (dist.counts[static_cast<size_t>(i)] != 0)
            sum += qpow * rpow[static_cast<size_t>(n - i)] * Scalar(dist.counts[static_cast<size_t>(i)]);
        qpow *= quarter;
    }
    return sum;
}

// F^c_p with the optimal class chosen pointwise per syndrome (the optimum
// may switch classes as p moves).
template <class Scalar>
Scalar fc_p(const CosetTable& table, const Scalar& p) {
    const std::uint64_t K = std::uint64_t(1) << table.dimension_k();
    Scalar total{0};
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        Scalar best = coset_objective(table.at(s, 0), p);
        for (std::uint32_t L = 1; L < table.class_count(); ++L)
            best = std::max(best, coset_objective(table.at(s, L), p));
        total += best;
    }
    return (Scalar(1) + Scalar(K) * total) / Scalar(K + 1);
}

// 1 - F^c_p as a sum of the non-chosen classes' objectives.  The class
// objectives over all cosets add up to exactly 1, so this form has no
// cancellation and stays accurate when the failure rate is ~p^d'.
template <class Scalar>
Scalar failure_correct_p(const CosetTable& table, const Scalar& p) {
    const std::uint64_t K = std::uint64_t(1) << table.dimension_k();
    Scalar rest{0};
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        std::vector<Scalar> vals;
        vals.reserve(table.class_count());
        for (std::uint32_t L = 0; L < table.class_count(); ++L)
            vals.push_back(coset_objective(table.at(s, L), p));
        size_t best = 0;
        for (size_t L = 1; L < vals.size(); ++L)
            if (vals[L] > vals[best]) best = L;
        for (size_t L = 0; L < vals.size(); ++L)
            if (L != best) rest += vals[L];
    }
    return Scalar(K) * rest / Scalar(K + 1);
}

// The p -> 0 limit of the pointwise-optimal recovery.  The objective's
// expansion in p is triangular in the A_i, so the limit of the argmax is
// the lexicographically largest weight sequence (A_0, A_1, ..., A_n); ties
// go to the lowest class index and cannot change any fidelity value.
inline RecoveryChoice p_zero_recovery(const CosetTable& table) {
    RecoveryChoice choice(table.syndrome_count(), 0);
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        std::uint32_t best = 0;
        for (std::uint32_t L = 1; L < table.class_count(); ++L)
            if (table.at(s, L).counts > table.at(s, best).counts) best = L;
        choice[s] = best;
    }
    return choice;
}

// Pointwise-optimal recovery at a fixed rational p, for checking the
// lexicographic rule against the literal argmax.
inline RecoveryChoice argmax_recovery_at(const CosetTable& table, const Rational& p) {
    RecoveryChoice choice(table.syndrome_count(), 0);
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        std::uint32_t best = 0;
        Rational best_val = coset_objective<Rational>(table.at(s, 0), p);
        for (std::uint32_t L = 1; L < table.class_count(); ++L) {
            Rational val = coset_objective<Rational>(table.at(s, L), p);
            if (val > best_val) {
                best_val = val;
                best = L;
            }
        }
        choice[s] = best;
    }
    return choice;
}

// Correction: failure ~ c' p^d' with d' = ceil(d/2) and
//   c' = K/(K+1) [ C(n,d') - 2^-d' sum_s A'_{d'}(chosen coset) ],
// the chosen cosets being the p -> 0 recovery classes.
inline SmallPCoefficient small_p_cprime(const CosetTable& table, int d) {
    const int n = table.length();
    const std::uint64_t K = std::uint64_t(1) << table.dimension_k();
    const int dp = (d + 1) / 2;
    const RecoveryChoice choice = p_zero_recovery(table);
    Rational sum = 0;
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s)
        sum += rains_coefficient(table.at(s, choice[s]), dp);
    const Rational bracket = Rational(binomial(n, dp)) - sum / Rational(pow2(dp));
    return {dp, Rational(K) * bracket / Rational(K + 1)};
}

inline SmallPCoefficient small_p_cprime(const AdditiveCode& code,
                                        std::uint64_t cap = kDefaultFullSpaceCap) {
    return small_p_cprime(coset_table(code, cap), parameters(code).d);
}

// ---------------------------------------------------------------------------
// Ranking
// ---------------------------------------------------------------------------

enum class RankMode { Detection, Correction };

inline RankMode rank_mode_from_string(const std::string& s) {
    if (s == "detection") return RankMode::Detection;
    if (s == "correction") return RankMode::Correction;
    throw std::invalid_argument("unknown ranking mode '" + s + "' (use detection or correction)");
}

struct RankEntry {
    std::string name;
    int d = 0;
    Rational c;
    bool tied_with_prev = false;
};

// Orders codes worst-to-best: distance ascending, then leading failure
// coefficient descending.  The sort is stable, so ties keep input order
// (and are flagged).
inline std::vector<RankEntry> rank_codes(const std::vector<AdditiveCode>& codes, RankMode mode) {
    std::vector<RankEntry> entries;
    for (const auto& code : codes) {
        const auto params = parameters(code);
        SmallPCoefficient sp = mode == RankMode::Detection
                                   ? small_p_c(enumerator_set(code), params.d)
                                   : small_p_cprime(coset_table(code), params.d);
        entries.push_back({code.name(), sp.d, sp.c, false});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const RankEntry& x, const RankEntry& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.c > y.c;
    });
    for (size_t i = 1; i < entries.size(); ++i)
        entries[i].tied_with_prev = entries[i].d == entries[i - 1].d && entries[i].c == entries[i - 1].c;
    return entries;
}

// ---------------------------------------------------------------------------
// Metric curves over a p-grid
// ---------------------------------------------------------------------------

struct CurvePoint {
    double p = 0;
    double td = 0;
    double fd = 0;
    double fc = 0;
    double fail_d = 0;
    double fail_c = 0;
};

inline std::vector<double> log_grid(double pmin, double pmax, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (!(pmin > 0) || !(pmax > pmin) || !(pmax <= 1))
        throw std::invalid_argument("grid requires 0 < pmin < pmax <= 1");
    std::vector<double> grid(static_cast<size_t>(points));
    const double lo = std::log10(pmin), hi = std::log10(pmax);
    for (int i = 0; i < points; ++i)
        grid[static_cast<size_t>(i)] = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
    return grid;
}

inline std::vector<CurvePoint> metric_curve(const EnumeratorSet& enums, const CosetTable& table,
                                            const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty p-grid");
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double p : grid) {
        CurvePoint pt;
        pt.p = p;
        pt.td = td_p(enums, p);
        pt.fail_d = failure_detect_p(enums, p);
        pt.fd = 1.0 - pt.fail_d / pt.td;
        pt.fail_c = failure_correct_p(table, p);
        pt.fc = 1.0 - pt.fail_c;
        out.push_back(pt);
    }
    return out;
}

}  // namespace qecenum
