#pragma once

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qecenum/code.hpp"
#include "qecenum/enumerators.hpp"
#include "qecenum/metrics.hpp"

// Dense-matrix reference path.  Everything here recomputes code properties
// from explicit Pauli operators on (C^2)^(x n), independently of the
// bit-packed combinatorial machinery, so the two can be checked against
// each other.
namespace qecenum::dense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kProjectorMaxQubits = 12;
inline constexpr int kSyndromeSetMaxQubits = 10;

// Hermitian Pauli lift of a GF(4) vector: X where the symbol is w, Z where
// it is W, Y where it is 1.  Qubit i is bit i of the computational basis
// index.  On basis states:
//
//   lift(x) |b> = i^{#Y} (-1)^{popcount(b & nu)} |b XOR mu>.
inline Complex lift_scale(const Gf4Vector& x) {
    constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^j
    return table[std::popcount(x.mu_mask() & x.nu_mask()) & 3];
}

inline void apply_lift(const Gf4Vector& x, const Vector& in, Vector& out) {
    const auto dim = in.size();
    out.resize(dim);
    const Complex scale = lift_scale(x);
    const std::uint32_t mu = x.mu_mask(), nu = x.nu_mask();
    for (Eigen::Index b = 0; b < dim; ++b) {
        const std::uint32_t src = static_cast<std::uint32_t>(b) ^ mu;
        const double sign = std::popcount(src & nu) & 1 ? -1.0 : 1.0;
        out[b] = scale * sign * in[src];
    }
}

inline Matrix lift_matrix(const Gf4Vector& x) {
    const Eigen::Index dim = Eigen::Index(1) << x.length();
    Matrix m = Matrix::Zero(dim, dim);
    const Complex scale = lift_scale(x);
    const std::uint32_t mu = x.mu_mask(), nu = x.nu_mask();
    for (Eigen::Index b = 0; b < dim; ++b) {
        const double sign = std::popcount(static_cast<std::uint32_t>(b) & nu) & 1 ? -1.0 : 1.0;
        m(b ^ mu, b) = scale * sign;
    }
    return m;
}

// lift(x) * M, using the fact that the lift is a signed permutation.
inline Matrix lift_times(const Gf4Vector& x, const Matrix& M) {
    Matrix out(M.rows(), M.cols());
    const Complex scale = lift_scale(x);
    const std::uint32_t mu = x.mu_mask(), nu = x.nu_mask();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        const std::uint32_t src = static_cast<std::uint32_t>(r) ^ mu;
        const Complex f = scale * (std::popcount(src & nu) & 1 ? -1.0 : 1.0);
        out.row(r) = f * M.row(src);
    }
    return out;
}

// lift(x) * M * lift(x)^dag.
inline Matrix conjugate_by_lift(const Gf4Vector& x, const Matrix& M) {
    return lift_times(x, lift_times(x, M.adjoint()).adjoint());
}

// Projector onto the joint +1 eigenspace of the generator lifts:
// P = prod_j (I + G_j)/2.  Its trace is 2^k for any phase convention.
inline Matrix projector(const AdditiveCode& code) {
    const int n = code.length();
    if (n > kProjectorMaxQubits)
        throw CapExceeded("dense projector qubit count", static_cast<std::uint64_t>(n),
                          kProjectorMaxQubits);
    const auto& gens = code.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i].star(gens[j]) != 0)
                throw std::logic_error("generator lifts do not commute; self-orthogonality bug upstream");

    const Eigen::Index dim = Eigen::Index(1) << n;
    Matrix p = Matrix::Identity(dim, dim);
    for (const auto& g : gens) p = 0.5 * (p + lift_times(g, p));
    return p;
}

// Partial trace over the qubits in traced_mask; the result acts on the
// remaining qubits, packed in increasing qubit order.
inline Matrix partial_trace(const Matrix& M, std::uint32_t traced_mask, int n) {
    std::vector<int> kept, traced;
    for (int i = 0; i < n; ++i) (((traced_mask >> i) & 1u) ? traced : kept).push_back(i);
    const Eigen::Index dim_kept = Eigen::Index(1) << kept.size();
    const Eigen::Index dim_traced = Eigen::Index(1) << traced.size();

    const auto expand = [](std::uint32_t idx, const std::vector<int>& pos) {
        std::uint32_t out = 0;
        for (size_t j = 0; j < pos.size(); ++j) out |= ((idx >> j) & 1u) << pos[j];
        return out;
    };
    std::vector<std::uint32_t> kexp(static_cast<size_t>(dim_kept)), texp(static_cast<size_t>(dim_traced));
    for (Eigen::Index i = 0; i < dim_kept; ++i) kexp[static_cast<size_t>(i)] = expand(static_cast<std::uint32_t>(i), kept);
    for (Eigen::Index i = 0; i < dim_traced; ++i) texp[static_cast<size_t>(i)] = expand(static_cast<std::uint32_t>(i), traced);

    Matrix out = Matrix::Zero(dim_kept, dim_kept);
    for (Eigen::Index r = 0; r < dim_kept; ++r)
        for (Eigen::Index c = 0; c < dim_kept; ++c) {
            Complex sum = 0;
            for (Eigen::Index t = 0; t < dim_traced; ++t)
                sum += M(kexp[static_cast<size_t>(r)] | texp[static_cast<size_t>(t)],
                         kexp[static_cast<size_t>(c)] | texp[static_cast<size_t>(t)]);
            out(r, c) = sum;
        }
    return out;
}

// Subset enumerators by partial traces of the projector:
//   A'_S = tr_S[(tr_S' P)^2] / K^2      B'_S = tr_S'[(tr_S P)^2] / K.
struct DenseSubsetEnumerators {
    double a = 0;
    double b = 0;
};

inline DenseSubsetEnumerators subset_enumerators(const Matrix& p, std::uint32_t subset_mask, int n,
                                                 std::uint64_t K) {
    const std::uint32_t complement = ~subset_mask & Gf4Vector::live_mask(n);
    const Matrix on_subset = partial_trace(p, complement, n);
    const Matrix on_complement = partial_trace(p, subset_mask, n);
    const double a = (on_subset * on_subset).trace().real() / static_cast<double>(K * K);
    const double b = (on_complement * on_complement).trace().real() / static_cast<double>(K);
    return {a, b};
}

// One minimum-weight error representative per syndrome.
inline std::vector<Gf4Vector> syndrome_representatives(const CosetTable& table) {
    std::vector<Gf4Vector> reps;
    reps.reserve(table.syndrome_count());
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        Gf4Vector best = table.representative(s, 0);
        for (std::uint32_t L = 1; L < table.class_count(); ++L) {
            const Gf4Vector& cand = table.representative(s, L);
            if (cand.weight() < best.weight()) best = cand;
        }
        reps.push_back(best);
    }
    return reps;
}

// The measurement resolution P_lambda = C_lambda P C_lambda^dag; these sum
// to the identity over all syndromes.
inline std::vector<Matrix> syndrome_projectors(const AdditiveCode& code, const CosetTable& table) {
    if (code.length() > kSyndromeSetMaxQubits)
        throw CapExceeded("syndrome projector qubit count", static_cast<std::uint64_t>(code.length()),
                          kSyndromeSetMaxQubits);
    const Matrix p = projector(code);
    std::vector<Matrix> out;
    for (const auto& rep : syndrome_representatives(table)) out.push_back(conjugate_by_lift(rep, p));
    return out;
}

// Orthonormal basis of the code space, extracted from the projector by
// column-pivoted deflation.  Throws if the result is not orthonormal to
// 1e-10 (a projector defect).
inline Matrix code_basis(const Matrix& p, std::uint64_t K) {
    Matrix residual = p;
    Matrix basis(p.rows(), static_cast<Eigen::Index>(K));
    for (std::uint64_t j = 0; j < K; ++j) {
        Eigen::Index pivot = 0;
        double best = -1;
        for (Eigen::Index c = 0; c < residual.cols(); ++c) {
            const double norm2 = residual.col(c).squaredNorm();
            if (norm2 > best) {
                best = norm2;
                pivot = c;
            }
        }
        Vector b = residual.col(pivot);
        b.normalize();
        basis.col(static_cast<Eigen::Index>(j)) = b;
        residual -= b * (b.adjoint() * residual);
    }
    const Matrix gram = basis.adjoint() * basis;
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw std::logic_error("extracted code basis is not orthonormal");
    return basis;
}

// Correction fidelity on a fixed error support S evaluated from explicit
// recovery operators,
//
//   F = sum_l [ tr{ (tr_S' C_l P)^dag (tr_S' C_l P) } + tr{ (tr_S P_l)(tr_S P) } ]
//       / (2^|S| K (K+1)),
//
// maximizing the first term per syndrome over the logical classes when no
// recovery map is pinned.  This is the operational route to F^c_S and must
// agree with the closed form (K A'_S + B'_S) / ((K+1) B'_S).
inline double correction_fidelity_subset(const AdditiveCode& code, const CosetTable& table,
                                         std::uint32_t subset_mask,
                                         const RecoveryChoice* pinned = nullptr) {
    const int n = code.length();
    const std::uint64_t K = std::uint64_t(1) << code.dimension_k();
    const Matrix p = projector(code);
    const std::uint32_t complement = ~subset_mask & Gf4Vector::live_mask(n);

    double total = 0;
    for (std::uint32_t s = 0; s < table.syndrome_count(); ++s) {
        double best_term1 = -1;
        for (std::uint32_t L = 0; L < table.class_count(); ++L) {
            if (pinned && (*pinned)[s] != L) continue;
            const Matrix cp = lift_times(table.representative(s, L), p);
            const Matrix x = partial_trace(cp, complement, n);
            const double term1 = (x.adjoint() * x).trace().real();
            best_term1 = std::max(best_term1, term1);
        }
        const Matrix p_lambda = conjugate_by_lift(table.representative(s, pinned ? (*pinned)[s] : 0), p);
        const Matrix a = partial_trace(p_lambda, subset_mask, n);
        const Matrix b = partial_trace(p, subset_mask, n);
        const double term2 = (a * b).trace().real();
        total += best_term1 + term2;
    }
    const double scale = std::pow(2.0, std::popcount(subset_mask)) * static_cast<double>(K) *
                         static_cast<double>(K + 1);
    return total / scale;
}

}  // namespace qecenum::dense
