#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qecenum/dense.hpp"
#include "qecenum/metrics.hpp"

namespace qecenum {

struct McReport {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string mode;
    std::string arg;
};

namespace mc_detail {

// All randomness flows through explicit primitives on top of mt19937_64 so
// that a seed pins the full sample stream regardless of standard library.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % bound;
    }

    std::complex<double> gaussian() {
        double u1;
        do {
            u1 = u01();
        } while (u1 == 0.0);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u01();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    std::uint32_t subset_of_size(int n, int m) {
        std::vector<int> idx(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i) {
            const auto j = static_cast<size_t>(i) + below(static_cast<std::uint64_t>(n - i));
            std::swap(idx[static_cast<size_t>(i)], idx[j]);
            mask |= 1u << idx[static_cast<size_t>(i)];
        }
        return mask;
    }

    std::uint32_t bernoulli_mask(int n, double p) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (u01() < p) mask |= 1u << i;
        return mask;
    }

    // Uniform displacement with support inside the mask: an independent
    // uniform GF(4) symbol (identity included) on each masked coordinate.
    Gf4Vector displacement(int n, std::uint32_t support_mask) {
        Gf4Vector v(n);
        for (int i = 0; i < n; ++i) {
            if (!((support_mask >> i) & 1u)) continue;
            const auto bits = static_cast<unsigned>(below(4));
            v.set(i, Gf4(bits >> 1, bits & 1u));
        }
        return v;
    }

  private:
    std::mt19937_64 gen_;
};

class Accumulator {
  public:
    void add(double x) {
        sum_ += x;
        sum_sq_ += x * x;
        ++count_;
    }

    McReport report() const {
        McReport r;
        r.samples = count_;
        r.estimate = sum_ / static_cast<double>(count_);
        if (count_ > 1) {
            const double var =
                std::max(0.0, (sum_sq_ - sum_ * sum_ / static_cast<double>(count_)) /
                                  static_cast<double>(count_ - 1));
            r.std_error = std::sqrt(var / static_cast<double>(count_));
        }
        return r;
    }

  private:
    double sum_ = 0;
    double sum_sq_ = 0;
    std::uint64_t count_ = 0;
};

}  // namespace mc_detail

enum class ErrorMode { Subset, Count, Channel };

// Which random depolarizing error hits the encoded state: a fixed support
// S, a uniformly random support of size m, or per-qubit Bernoulli(p)
// supports (the depolarizing channel).
struct ErrorSpec {
    ErrorMode mode = ErrorMode::Subset;
    std::uint32_t subset_mask = 0;
    int m = 0;
    double p = 0;

    static ErrorSpec subset(std::uint32_t mask) { return {ErrorMode::Subset, mask, 0, 0}; }
    static ErrorSpec count(int m) { return {ErrorMode::Count, 0, m, 0}; }
    static ErrorSpec channel(double p) { return {ErrorMode::Channel, 0, 0, p}; }

    void validate(int n) const {
        switch (mode) {
            case ErrorMode::Subset:
                if ((subset_mask & ~Gf4Vector::live_mask(n)) != 0)
                    throw std::out_of_range("error subset has bits outside {1..n}");
                break;
            case ErrorMode::Count:
                if (m < 0 || m > n) throw std::invalid_argument("error count m must be in [0, n]");
                break;
            case ErrorMode::Channel:
                if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error probability p must be in [0, 1]");
                break;
        }
    }

    std::uint32_t draw_support(mc_detail::Sampler& rng, int n) const {
        switch (mode) {
            case ErrorMode::Subset: return subset_mask;
            case ErrorMode::Count: return rng.subset_of_size(n, m);
            default: return rng.bernoulli_mask(n, p);
        }
    }

    std::string mode_string() const {
        switch (mode) {
            case ErrorMode::Subset: return "S";
            case ErrorMode::Count: return "m";
            default: return "p";
        }
    }

    std::string arg_string(int n) const {
        switch (mode) {
            case ErrorMode::Subset: {
                std::string s = "{";
                for (int i = 0; i < n; ++i)
                    if ((subset_mask >> i) & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
                return s + "}";
            }
            case ErrorMode::Count: return std::to_string(m);
            default: {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%g", p);
                return buf;
            }
        }
    }
};

struct DetectionEstimates {
    McReport transmission;        // <psi'| P |psi'>
    McReport fidelity_numerator;  // |<psi|Upsilon|psi>|^2 = T^d F^d
};

namespace mc_detail {

inline dense::Vector random_code_state(const dense::Matrix& basis, Sampler& rng) {
    dense::Vector coeff(basis.cols());
    for (Eigen::Index j = 0; j < basis.cols(); ++j) coeff[j] = rng.gaussian();
    coeff.normalize();
    return basis * coeff;
}

}  // namespace mc_detail

inline DetectionEstimates mc_detection(const AdditiveCode& code, const ErrorSpec& spec,
                                       std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const int n = code.length();
    spec.validate(n);

    const dense::Matrix p = dense::projector(code);
    const dense::Matrix basis = dense::code_basis(p, std::uint64_t(1) << code.dimension_k());

    mc_detail::Sampler rng(seed);
    mc_detail::Accumulator acc_t, acc_f;
    dense::Vector corrupted;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const dense::Vector psi = mc_detail::random_code_state(basis, rng);
        const Gf4Vector err = rng.displacement(n, spec.draw_support(rng, n));
        dense::apply_lift(err, psi, corrupted);
        acc_t.add((basis.adjoint() * corrupted).squaredNorm());
        acc_f.add(std::norm(psi.dot(corrupted)));
    }

    DetectionEstimates out{acc_t.report(), acc_f.report()};
    for (McReport* r : {&out.transmission, &out.fidelity_numerator}) {
        r->seed = seed;
        r->mode = spec.mode_string();
        r->arg = spec.arg_string(n);
    }
    return out;
}

// Full correction experiment: corrupt, measure the syndrome by sequential
// generator measurements (equivalent to sampling the P_lambda resolution),
// apply the mapped recovery operator, and record the overlap with the
// original state.  The recovery map fixes one logical class per syndrome;
// the estimate targets the restricted-map fidelity, not the per-m optimum.
inline McReport mc_correction(const AdditiveCode& code, const CosetTable& table,
                              const RecoveryChoice& recovery, const ErrorSpec& spec,
                              std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const int n = code.length();
    spec.validate(n);
    check_recovery(table, recovery);

    const dense::Matrix p = dense::projector(code);
    const dense::Matrix basis = dense::code_basis(p, std::uint64_t(1) << code.dimension_k());
    const auto& gens = code.generators();

    mc_detail::Sampler rng(seed);
    mc_detail::Accumulator acc;
    dense::Vector state, flipped;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const dense::Vector psi = mc_detail::random_code_state(basis, rng);
        const Gf4Vector err = rng.displacement(n, spec.draw_support(rng, n));
        dense::apply_lift(err, psi, state);

        std::uint32_t syndrome = 0;
        for (size_t j = 0; j < gens.size(); ++j) {
            dense::apply_lift(gens[j], state, flipped);
            double q = 0.5 * (1.0 + state.dot(flipped).real());
            q = std::clamp(q, 0.0, 1.0);
            const double u = rng.u01();
            const bool plus = q >= 1e-12 && (u < q || q > 1.0 - 1e-12);
            if (plus) {
                state = 0.5 * (state + flipped);
            } else {
                state = 0.5 * (state - flipped);
                syndrome |= 1u << j;
            }
            state.normalize();
        }

        dense::apply_lift(table.representative(syndrome, recovery[syndrome]), state, flipped);
        acc.add(std::norm(psi.dot(flipped)));
    }

    McReport r = acc.report();
    r.seed = seed;
    r.mode = spec.mode_string();
    r.arg = spec.arg_string(n);
    return r;
}

}  // namespace qecenum
