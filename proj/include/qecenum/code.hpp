#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qecenum/gf4.hpp"
#include "qecenum/rational.hpp"

namespace qecenum {

inline constexpr std::uint64_t kDefaultSpanCap = std::uint64_t(1) << 26;

namespace gf2 {

// A GF(4)^n vector as one GF(2) row of 2n bits: mu in the low n bits,
// nu in the next n.  All rank/kernel work happens on these words.
inline std::uint64_t pack(const Gf4Vector& v) {
    return static_cast<std::uint64_t>(v.mu_mask()) |
           (static_cast<std::uint64_t>(v.nu_mask()) << v.length());
}

inline Gf4Vector unpack(std::uint64_t row, int n) {
    const std::uint32_t live = Gf4Vector::live_mask(n);
    return Gf4Vector(n, static_cast<std::uint32_t>(row) & live,
                     static_cast<std::uint32_t>(row >> n) & live);
}

// Row echelon basis with one pivot bit per row; rows are kept fully reduced
// so a span has exactly one canonical basis.
struct Echelon {
    std::vector<std::uint64_t> rows;
    std::vector<int> pivots;  // pivot bit of rows[i]

    // Reduces v by the basis; the remainder is zero iff v is in the span.
    std::uint64_t reduce(std::uint64_t v) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if ((v >> pivots[i]) & 1u) v ^= rows[i];
        return v;
    }

    bool contains(std::uint64_t v) const { return reduce(v) == 0; }

    // Inserts v if independent; returns false for dependent vectors.
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (v == 0) return false;
        const int pivot = std::countr_zero(v);
        for (size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> pivot) & 1u) rows[i] ^= v;
        const auto pos = std::upper_bound(pivots.begin(), pivots.end(), pivot) - pivots.begin();
        rows.insert(rows.begin() + pos, v);
        pivots.insert(pivots.begin() + pos, pivot);
        return true;
    }
};

inline Echelon echelon_basis(const std::vector<std::uint64_t>& rows) {
    Echelon e;
    for (std::uint64_t r : rows) e.insert(r);
    return e;
}

// Basis of {v : parity(v & m) = 0 for every m in rows}, over GF(2)^cols.
inline std::vector<std::uint64_t> kernel_basis(std::vector<std::uint64_t> rows, int cols) {
    std::vector<int> pivots;
    size_t rank = 0;
    for (int c = 0; c < cols && rank < rows.size(); ++c) {
        size_t sel = rank;
        while (sel < rows.size() && ((rows[sel] >> c) & 1u) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::uint64_t> basis;
    size_t p = 0;
    for (int c = 0; c < cols; ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
            continue;
        }
        std::uint64_t v = std::uint64_t(1) << c;
        for (size_t i = 0; i < pivots.size(); ++i) v |= ((rows[i] >> c) & 1u) << pivots[i];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace gf2

// Walks the span of a GF(2)-independent basis in Gray-code order, visiting
// each of the 2^len elements exactly once and starting at the zero vector.
template <class Visitor>
void for_each_span_element(int n, const std::vector<Gf4Vector>& basis, Visitor&& visit,
                           std::uint64_t cap = kDefaultSpanCap) {
    const std::uint64_t size = std::uint64_t(1) << basis.size();
    if (basis.size() >= 63 || size > cap) throw CapExceeded("span enumeration", size, cap);
    Gf4Vector x(n);
    visit(x);
    for (std::uint64_t i = 1; i < size; ++i) {
        const int bit = std::countr_zero(i);
        x = x + basis[static_cast<size_t>(bit)];
        visit(x);
    }
}

struct CodeParameters {
    int n = 0;
    int k = 0;
    int d = 0;
    bool pure = false;

    int d_prime() const { return (d + 1) / 2; }
    std::uint64_t code_size() const { return std::uint64_t(1) << (n - k); }
    std::uint64_t dual_size() const { return std::uint64_t(1) << (n + k); }
    std::uint64_t K() const { return std::uint64_t(1) << k; }
};

// A self-orthogonal additive code C over GF(4), i.e. a qubit stabilizer
// code.  Generators are stored as the canonical reduced-echelon basis of C
// (so equal codes compare equal); dual_generators() extends them to a basis
// of C^perp under the trace inner product.  The rows the code was built
// from are kept verbatim for display.
class AdditiveCode {
  public:
    AdditiveCode(std::vector<Gf4Vector> rows, std::string name = "")
        : name_(std::move(name)), source_rows_(std::move(rows)) {
        if (source_rows_.empty()) throw std::invalid_argument("a code needs at least one generator row");
        n_ = source_rows_.front().length();
        for (const auto& r : source_rows_)
            if (r.length() != n_)
                throw std::invalid_argument("inconsistent row lengths: " + std::to_string(r.length()) +
                                            " vs " + std::to_string(n_));
        for (size_t i = 0; i < source_rows_.size(); ++i)
            for (size_t j = i; j < source_rows_.size(); ++j)
                if (source_rows_[i].star(source_rows_[j]) != 0)
                    throw std::invalid_argument("not self-orthogonal: rows " + std::to_string(i + 1) +
                                                " and " + std::to_string(j + 1) +
                                                " have trace inner product 1");

        gf2::Echelon basis;
        for (size_t i = 0; i < source_rows_.size(); ++i)
            if (!basis.insert(gf2::pack(source_rows_[i])))
                throw std::invalid_argument("dependent rows: row " + std::to_string(i + 1) +
                                            " lies in the span of the previous rows");
        k_ = n_ - static_cast<int>(basis.rows.size());
        if (k_ < 0) throw std::invalid_argument("more independent rows than qubits");
        code_basis_ = basis;

        build_dual();
    }

    int length() const { return n_; }
    int dimension_k() const { return k_; }
    const std::string& name() const { return name_; }

    const std::vector<Gf4Vector>& generators() const { return generators_; }
    const std::vector<Gf4Vector>& dual_generators() const { return dual_generators_; }
    const std::vector<Gf4Vector>& source_rows() const { return source_rows_; }

    bool contains(const Gf4Vector& v) const { return code_basis_.contains(gf2::pack(v)); }
    bool dual_contains(const Gf4Vector& v) const { return dual_basis_.contains(gf2::pack(v)); }

    friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
        return a.n_ == b.n_ && a.code_basis_.rows == b.code_basis_.rows;
    }

  private:
    void build_dual() {
        // C^perp is the kernel of x -> (x * g) over all generators; under
        // pack() the functional for g is the mu/nu-swapped row of g.
        std::vector<std::uint64_t> functionals;
        for (std::uint64_t row : code_basis_.rows) {
            const Gf4Vector g = gf2::unpack(row, n_);
            functionals.push_back(static_cast<std::uint64_t>(g.nu_mask()) |
                                  (static_cast<std::uint64_t>(g.mu_mask()) << n_));
        }
        const auto kernel = gf2::kernel_basis(functionals, 2 * n_);

        // Complete the code basis to a basis of C^perp so that the first
        // n-k dual generators are the code generators themselves.
        gf2::Echelon extended = code_basis_;
        std::vector<std::uint64_t> extra;
        for (std::uint64_t v : kernel)
            if (extended.insert(v)) extra.push_back(v);
        if (extended.rows.size() != static_cast<size_t>(n_ + k_))
            throw std::logic_error("dual basis has wrong rank");  // unreachable after validation

        for (std::uint64_t row : code_basis_.rows) generators_.push_back(gf2::unpack(row, n_));
        dual_generators_ = generators_;
        for (std::uint64_t v : extra) dual_generators_.push_back(gf2::unpack(v, n_));
        dual_basis_ = gf2::echelon_basis(
            [&] {
                std::vector<std::uint64_t> rows;
                for (const auto& g : dual_generators_) rows.push_back(gf2::pack(g));
                return rows;
            }());
    }

    int n_ = 0;
    int k_ = 0;
    std::string name_;
    std::vector<Gf4Vector> source_rows_;
    std::vector<Gf4Vector> generators_;
    std::vector<Gf4Vector> dual_generators_;
    gf2::Echelon code_basis_;
    gf2::Echelon dual_basis_;
};

// Code file format:
//   line 1:  n <n> k <k> name <label>
//   then n-k rows of n characters over {0,1,w,W}, whitespace-free.
// Lines starting with '#' and blank lines are ignored.
inline AdditiveCode parse_code(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("empty code file");

    std::istringstream header(lines[0]);
    std::string key_n, key_k, key_name, name;
    int n = 0, k = 0;
    header >> key_n >> n >> key_k >> k;
    if (!header || key_n != "n" || key_k != "k")
        throw std::invalid_argument("malformed header line: '" + lines[0] +
                                    "' (expected 'n <n> k <k> name <label>')");
    if (header >> key_name) {
        if (key_name != "name")
            throw std::invalid_argument("malformed header line: unexpected token '" + key_name + "'");
        header >> name;
    }
    if (n < 1 || n > Gf4Vector::kMaxLength)
        throw std::invalid_argument("length n must be in [1, 32], got " + std::to_string(n));
    if (k < 0 || k > n) throw std::invalid_argument("dimension k must be in [0, n]");

    const int expected_rows = n - k;
    if (static_cast<int>(lines.size()) - 1 != expected_rows)
        throw std::invalid_argument("expected " + std::to_string(expected_rows) + " generator rows, found " +
                                    std::to_string(lines.size() - 1));

    std::vector<Gf4Vector> rows;
    for (int i = 0; i < expected_rows; ++i) {
        const std::string& text = lines[static_cast<size_t>(i) + 1];
        if (static_cast<int>(text.size()) != n)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has length " +
                                        std::to_string(text.size()) + ", expected " + std::to_string(n));
        rows.push_back(Gf4Vector::from_string(text));
    }

    AdditiveCode code(std::move(rows), name);
    if (code.dimension_k() != k)
        throw std::invalid_argument("dependent rows: header claims k=" + std::to_string(k) +
                                    " but the rows span a smaller code");
    return code;
}

inline AdditiveCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

inline AdditiveCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
    try {
        return parse_code(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline void write_code(std::ostream& out, const AdditiveCode& code) {
    out << "n " << code.length() << " k " << code.dimension_k();
    if (!code.name().empty()) out << " name " << code.name();
    out << "\n";
    for (const auto& row : code.source_rows()) out << row.to_string() << "\n";
}

// The length-1 code generated by a single nonzero symbol; an [[1,0]] block
// used to pad codes, e.g. 1 (+) G5.
inline AdditiveCode single_block(Gf4 symbol, std::string name = "") {
    if (symbol.is_zero()) throw std::invalid_argument("single-symbol block must be nonzero");
    Gf4Vector v(1);
    v.set(0, symbol);
    return AdditiveCode({v}, std::move(name));
}

inline AdditiveCode direct_sum(const AdditiveCode& a, const AdditiveCode& b, std::string name = "") {
    const int n = a.length() + b.length();
    std::vector<Gf4Vector> rows;
    for (const auto& r : a.source_rows())
        rows.push_back(Gf4Vector(n, r.mu_mask(), r.nu_mask()));
    for (const auto& r : b.source_rows())
        rows.push_back(Gf4Vector(n, static_cast<std::uint32_t>(r.mu_mask()) << a.length(),
                                 static_cast<std::uint32_t>(r.nu_mask()) << a.length()));
    return AdditiveCode(std::move(rows), std::move(name));
}

// [[n,k,d]] parameters by exhaustive weight scan of C^perp.  For k >= 1, d
// is the minimum weight in C^perp \ C; a k = 0 code is self-dual and d is
// its minimum nonzero weight (such codes are pure by convention).
inline CodeParameters parameters(const AdditiveCode& code, std::uint64_t cap = kDefaultSpanCap) {
    CodeParameters p;
    p.n = code.length();
    p.k = code.dimension_k();

    int min_outside = p.n + 1;   // min weight in C^perp \ C
    int min_nonzero = p.n + 1;   // min nonzero weight in C^perp
    for_each_span_element(
        p.n, code.dual_generators(),
        [&](const Gf4Vector& v) {
            if (v.is_zero()) return;
            const int w = v.weight();
            min_nonzero = std::min(min_nonzero, w);
            if (w < min_outside && !code.contains(v)) min_outside = w;
        },
        cap);

    if (p.k == 0) {
        p.d = min_nonzero;
        p.pure = true;
    } else {
        p.d = min_outside;
        p.pure = min_nonzero >= p.d;
    }
    return p;
}

}  // namespace qecenum
