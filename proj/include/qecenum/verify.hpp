#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qecenum/catalog.hpp"
#include "qecenum/dense.hpp"
#include "qecenum/metrics.hpp"
#include "qecenum/monte_carlo.hpp"

namespace qecenum {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // code name, parameter, expected vs got
};

enum class VerifyLevel { Quick, Full };

namespace verify_detail {

struct PublishedCode {
    const char* name;
    int n, k, d;
    bool pure;
    const char* detect_c;   // leading detection coefficient at distance d
    int d_prime;
    const char* correct_c;  // leading correction coefficient at d'
};

// Parameters and small-p coefficients as published for this catalog.
inline const std::vector<PublishedCode>& published() {
    static const std::vector<PublishedCode> table = {
        {"G4a", 4, 1, 2, true, "1/4", 1, "1"},
        {"G4b", 4, 1, 2, true, "1/3", 1, "1"},
        {"G5", 5, 1, 3, true, "5/16", 2, "15/4"},
        {"G6a", 6, 1, 3, false, "1/4", 2, "19/4"},
        {"G6b", 6, 1, 3, false, "5/16", 2, "15/4"},
        {"G7a", 7, 1, 3, true, "13/96", 2, "41/8"},
        {"G7b", 7, 1, 3, true, "7/32", 2, "49/8"},
        {"G8a", 8, 1, 3, true, "1/12", 2, "127/24"},
        {"G8b", 8, 1, 3, true, "1/12", 2, "5"},
        {"G8c", 8, 1, 3, true, "1/8", 2, "31/6"},
        {"G9a", 9, 1, 3, true, "1/12", 2, "5"},
        {"G9b", 9, 1, 3, true, "1/8", 2, "23/6"},
        {"G9c", 9, 1, 3, false, "13/32", 2, "39/8"},
        {"G10", 10, 1, 4, true, "5/64", 2, "15/4"},
        {"G11", 11, 1, 5, true, "33/256", 3, "273/8"},
    };
    return table;
}

// Worst-to-best orderings as published; ties between equal (d, c) pairs
// follow the original presentation.
inline const std::vector<const char*>& published_detection_order() {
    static const std::vector<const char*> order = {"G4b", "G4a", "G9c", "G5",  "G6a", "G7b", "G7a",
                                                   "G8c", "G9b", "G8b", "G8a", "G9a", "G10", "G11"};
    return order;
}

inline const std::vector<const char*>& published_correction_order() {
    static const std::vector<const char*> order = {"G4b", "G4a", "G7b", "G8a", "G8c", "G7a", "G9a",
                                                   "G8b", "G9c", "G6a", "G9b", "G10", "G5",  "G11"};
    return order;
}

class Runner {
  public:
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        results_.push_back({name, ok, ok ? "" : detail});
    }

    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        try {
            fn(*this);
        } catch (const std::exception& e) {
            results_.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::vector<CheckResult> results_;
};

inline void check_parameters(Runner& r) {
    for (const auto& pub : published()) {
        const auto params = parameters(catalog(pub.name));
        const bool ok = params.n == pub.n && params.k == pub.k && params.d == pub.d &&
                        params.pure == pub.pure && params.d_prime() == pub.d_prime;
        r.check(std::string("parameters ") + pub.name, ok,
                std::string(pub.name) + ": expected [[" + std::to_string(pub.n) + "," +
                    std::to_string(pub.k) + "," + std::to_string(pub.d) + "]] " +
                    (pub.pure ? "pure" : "impure") + ", got [[" + std::to_string(params.n) + "," +
                    std::to_string(params.k) + "," + std::to_string(params.d) + "]] " +
                    (params.pure ? "pure" : "impure"));
    }
}

inline void check_enumerator_identities(Runner& r) {
    for (const auto& pub : published()) {
        const auto code = catalog(pub.name);
        const auto e = enumerator_set(code);
        const auto params = parameters(code);
        const std::uint64_t K = e.K();
        std::string bad;

        if (e.a.counts[0] != 1 || e.b.counts[0] != 1) bad += " A0/B0 != 1;";
        for (int i = 0; i <= e.n; ++i) {
            if (e.b.counts[size_t(i)] < e.a.counts[size_t(i)]) bad += " B_" + std::to_string(i) + " < A_" + std::to_string(i) + ";";
            if (i > 0 && i < params.d && e.b.counts[size_t(i)] != e.a.counts[size_t(i)])
                bad += " B_i != A_i below d at i=" + std::to_string(i) + ";";
        }
        bool pure_by_counts = true;
        for (int i = 1; i < params.d; ++i)
            if (e.a.counts[size_t(i)] != 0 || e.b.counts[size_t(i)] != 0) pure_by_counts = false;
        if (pure_by_counts != params.pure) bad += " purity criterion mismatch;";

        for (int m = 0; m <= e.n; ++m) {
            if (e.b_rains[size_t(m)] != Rational(K) * e.a_rains[size_t(e.n - m)])
                bad += " B'_m != K A'_{n-m} at m=" + std::to_string(m) + ";";
            const Rational scaled_a = e.a_rains[size_t(m)] / Rational(binomial(e.n, m));
            const Rational scaled_b = e.b_rains[size_t(m)] / Rational(binomial(e.n, m));
            const Rational lo_a = std::max(Rational(1, pow2(m)), Rational(1, BigInt(K) * pow2(e.n - m)));
            const Rational hi_a = std::min(Rational(1), Rational(pow2(e.n - m), K));
            const Rational lo_b = std::max(Rational(1, pow2(m)), Rational(BigInt(K), pow2(e.n - m)));
            const Rational hi_b = std::min(Rational(pow2(m)), Rational(K));
            if (scaled_a < lo_a || scaled_a > hi_a) bad += " A' bound violated at m=" + std::to_string(m) + ";";
            if (scaled_b < lo_b || scaled_b > hi_b) bad += " B' bound violated at m=" + std::to_string(m) + ";";

            const Rational lhs = Rational(K + 1) * fd_m(e, e.n - m) - 1;
            const Rational rhs_den = Rational(K + 1) * fd_m(e, m) - 1;
            if (lhs * rhs_den != 1) bad += " fidelity reciprocal fails at m=" + std::to_string(m) + ";";
        }
        if (e.n % 2 == 0 && fd_m(e, e.n / 2) != Rational(2, K + 1)) bad += " F^d_{n/2} != 2/(K+1);";
        if (distance_via_enumerators(e) != params.d) bad += " enumerator distance != scan distance;";

        r.check(std::string("enumerator identities ") + pub.name, bad.empty(), std::string(pub.name) + ":" + bad);
    }
}

inline void check_ranking(Runner& r, RankMode mode) {
    const bool detect = mode == RankMode::Detection;
    const auto& order = detect ? published_detection_order() : published_correction_order();
    std::vector<AdditiveCode> codes;
    for (const char* name : order) codes.push_back(catalog(name));
    const auto entries = rank_codes(codes, mode);

    std::string bad;
    for (size_t i = 0; i < order.size(); ++i) {
        const PublishedCode* pub = nullptr;
        for (const auto& p : published())
            if (std::string(p.name) == order[i]) pub = &p;
        const int want_d = detect ? pub->d : pub->d_prime;
        const Rational want_c = parse_fraction(detect ? pub->detect_c : pub->correct_c);
        if (entries[i].name != order[i])
            bad += " position " + std::to_string(i + 1) + ": expected " + order[i] + ", got " +
                   entries[i].name + ";";
        else if (entries[i].d != want_d || entries[i].c != want_c)
            bad += std::string(" ") + order[i] + ": expected (" + std::to_string(want_d) + "," +
                   fraction_string(want_c) + "), got (" + std::to_string(entries[i].d) + "," +
                   fraction_string(entries[i].c) + ");";
    }
    r.check(detect ? "detection ranking" : "correction ranking", bad.empty(), bad);
}

inline void check_correction_metrics(Runner& r) {
    for (const auto& pub : published()) {
        const auto code = catalog(pub.name);
        const auto params = parameters(code);
        const auto table = coset_table(code);
        std::string bad;

        std::uint64_t binned = 0;
        for (std::uint32_t s = 0; s < table.syndrome_count(); ++s)
            for (std::uint32_t L = 0; L < table.class_count(); ++L) binned += table.at(s, L).total();
        if (binned != (std::uint64_t(1) << (2 * params.n))) bad += " coset table does not partition 4^n;";

        for (int m = 0; 2 * m < params.d; ++m)
            if (fc_m(table, m) != 1) bad += " F^c_m != 1 at m=" + std::to_string(m) + ";";

        const auto sp = small_p_cprime(table, params.d);
        const Rational via_fc = Rational(binomial(params.n, sp.d)) * (Rational(1) - fc_m(table, sp.d));
        if (sp.c != via_fc) bad += " c' disagrees with C(n,d')(1 - F^c_{d'});";

        if (p_zero_recovery(table) != argmax_recovery_at(table, Rational(1, 1000000)))
            bad += " lexicographic recovery differs from argmax at p=1e-6;";

        r.check(std::string("correction metrics ") + pub.name, bad.empty(), std::string(pub.name) + ":" + bad);
    }
}

inline void check_dense_oracle(Runner& r, std::uint64_t seed) {
    // Exhaustive subset equivalence for n <= 7.
    for (const auto& pub : published()) {
        if (pub.n > 7) continue;
        const auto code = catalog(pub.name);
        const auto p = dense::projector(code);
        double worst = 0;
        for (std::uint32_t mask = 0; mask < (1u << pub.n); ++mask) {
            const auto d = dense::subset_enumerators(p, mask, pub.n, std::uint64_t(1) << pub.k);
            const auto c = subset_enumerators(code, mask);
            worst = std::max(worst, std::abs(d.a - to_double(c.a)));
            worst = std::max(worst, std::abs(d.b - to_double(c.b)));
        }
        r.check(std::string("dense subset enumerators ") + pub.name, worst <= 1e-10,
                std::string(pub.name) + ": worst |dense - combinatorial| = " + std::to_string(worst));
    }
    // 50 random subsets for each n in {8, 9}.
    mc_detail::Sampler rng(seed);
    for (const auto& pub : published()) {
        if (pub.n != 8 && pub.n != 9) continue;
        const auto code = catalog(pub.name);
        const auto p = dense::projector(code);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            const auto mask = static_cast<std::uint32_t>(rng.below(std::uint64_t(1) << pub.n));
            const auto d = dense::subset_enumerators(p, mask, pub.n, std::uint64_t(1) << pub.k);
            const auto c = subset_enumerators(code, mask);
            worst = std::max(worst, std::abs(d.a - to_double(c.a)));
            worst = std::max(worst, std::abs(d.b - to_double(c.b)));
        }
        r.check(std::string("dense subset enumerators ") + pub.name, worst <= 1e-10,
                std::string(pub.name) + ": worst |dense - combinatorial| = " + std::to_string(worst));
    }
    // Measurement resolution.
    for (const char* name : {"G5", "G6a"}) {
        const auto code = catalog(name);
        const auto projs = dense::syndrome_projectors(code, coset_table(code));
        dense::Matrix sum = dense::Matrix::Zero(1 << code.length(), 1 << code.length());
        for (const auto& pl : projs) sum += pl;
        const double err =
            (sum - dense::Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
        r.check(std::string("syndrome projectors sum to identity ") + name, err <= 1e-10,
                std::string(name) + ": max deviation " + std::to_string(err));
    }
}

inline void check_monte_carlo(Runner& r, std::uint64_t seed) {
    const auto g5 = catalog("G5");
    const auto e5 = enumerator_set(g5);
    const auto table = coset_table(g5);
    const std::uint64_t samples = 100000;

    for (int m : {1, 2, 3}) {
        const auto est = mc_detection(g5, ErrorSpec::count(m), samples, seed + static_cast<std::uint64_t>(m));
        const double td_exact = to_double(td_m(e5, m));
        const double fn_exact = to_double(td_m(e5, m) * fd_m(e5, m));
        const bool ok_t = std::abs(est.transmission.estimate - td_exact) <= 3 * est.transmission.std_error;
        const bool ok_f = std::abs(est.fidelity_numerator.estimate - fn_exact) <=
                          3 * est.fidelity_numerator.std_error;
        r.check("mc detection G5 m=" + std::to_string(m), ok_t && ok_f,
                "G5 m=" + std::to_string(m) + ": Td " + std::to_string(est.transmission.estimate) +
                    " +- " + std::to_string(est.transmission.std_error) + " vs exact " +
                    std::to_string(td_exact) + "; numerator " +
                    std::to_string(est.fidelity_numerator.estimate) + " +- " +
                    std::to_string(est.fidelity_numerator.std_error) + " vs exact " +
                    std::to_string(fn_exact));
    }

    const auto recovery = p_zero_recovery(table);
    for (int m : {1, 2}) {
        const auto est = mc_correction(g5, table, recovery, ErrorSpec::count(m), samples,
                                       seed + 100 + static_cast<std::uint64_t>(m));
        const double exact = to_double(fc_m_restricted(table, m, recovery));
        const bool ok = std::abs(est.estimate - exact) <= 3 * est.std_error ||
                        (est.std_error == 0 && est.estimate == exact);
        r.check("mc correction G5 m=" + std::to_string(m), ok,
                "G5 m=" + std::to_string(m) + ": " + std::to_string(est.estimate) + " +- " +
                    std::to_string(est.std_error) + " vs exact " + std::to_string(exact));
    }
}

}  // namespace verify_detail

// The invariant suites behind `verify`: quick covers the exact identities
// and published rankings, full adds the dense-oracle equivalences and the
// seeded Monte Carlo gates.
inline std::vector<CheckResult> run_verification(VerifyLevel level, std::uint64_t seed) {
    verify_detail::Runner r;
    r.run("parameters", verify_detail::check_parameters);
    r.run("enumerator identities", verify_detail::check_enumerator_identities);
    r.run("detection ranking", [](verify_detail::Runner& rr) { verify_detail::check_ranking(rr, RankMode::Detection); });
    r.run("correction ranking", [](verify_detail::Runner& rr) { verify_detail::check_ranking(rr, RankMode::Correction); });
    r.run("correction metrics", verify_detail::check_correction_metrics);
    if (level == VerifyLevel::Full) {
        r.run("dense oracle", [seed](verify_detail::Runner& rr) { verify_detail::check_dense_oracle(rr, seed); });
        r.run("monte carlo", [seed](verify_detail::Runner& rr) { verify_detail::check_monte_carlo(rr, seed); });
    }
    return r.take();
}

}  // namespace qecenum
