#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qecenum {

// GF(4) = {0, 1, w, W} where w is a primitive element and W = w^2 = 1 + w.
// An element x is stored as the GF(2) pair (mu, nu) with x = w*mu + W*nu:
//
//   0 <-> (0,0)   w <-> (1,0)   W <-> (0,1)   1 <-> (1,1)
//
// In this encoding addition is XOR, conjugation (w <-> W) swaps the bits,
// and the trace map Tr(x) = x + x^2 onto GF(2) is mu XOR nu.
class Gf4 {
  public:
    constexpr Gf4() = default;
    constexpr Gf4(unsigned mu, unsigned nu) : mu_(mu & 1u), nu_(nu & 1u) {}

    static constexpr Gf4 zero() { return {0, 0}; }
    static constexpr Gf4 one() { return {1, 1}; }
    static constexpr Gf4 omega() { return {1, 0}; }
    static constexpr Gf4 omega_bar() { return {0, 1}; }

    constexpr unsigned mu() const { return mu_; }
    constexpr unsigned nu() const { return nu_; }
    constexpr bool is_zero() const { return mu_ == 0 && nu_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return {a.mu_ ^ b.mu_, a.nu_ ^ b.nu_}; }

    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        // w*w = W, w*W = 1, W*W = w; expressed directly on (mu, nu) bits.
        const unsigned mu = (a.mu_ & b.nu_) ^ (a.nu_ & b.mu_) ^ (a.nu_ & b.nu_);
        const unsigned nu = (a.mu_ & b.mu_) ^ (a.mu_ & b.nu_) ^ (a.nu_ & b.mu_);
        return {mu, nu};
    }

    constexpr Gf4 conj() const { return {nu_, mu_}; }
    constexpr unsigned trace() const { return mu_ ^ nu_; }

    friend constexpr bool operator==(Gf4 a, Gf4 b) = default;

    // Text alphabet: '0', '1', 'w' (omega), 'W' (omega bar).
    constexpr char to_char() const {
        constexpr char table[4] = {'0', 'W', 'w', '1'};
        return table[(mu_ << 1) | nu_];
    }

    static constexpr Gf4 from_char(char c) {
        switch (c) {
            case '0': return zero();
            case '1': return one();
            case 'w': return omega();
            case 'W': return omega_bar();
            default: throw std::invalid_argument(std::string("invalid GF(4) symbol '") + c + "'");
        }
    }

  private:
    unsigned mu_ = 0;
    unsigned nu_ = 0;
};

// Vector in GF(4)^n with 1 <= n <= 32, packed as two n-bit masks so that
// bit i of (mu, nu) holds the encoding of coordinate i.  Addition, weight,
// support and the trace inner product are all word-parallel.
class Gf4Vector {
  public:
    static constexpr int kMaxLength = 32;

    explicit Gf4Vector(int n) : n_(check_length(n)) {}

    Gf4Vector(int n, std::uint32_t mu, std::uint32_t nu) : n_(check_length(n)), mu_(mu), nu_(nu) {
        const std::uint32_t live = live_mask(n);
        if ((mu & ~live) != 0 || (nu & ~live) != 0)
            throw std::invalid_argument("mask bits set beyond vector length");
    }

    static Gf4Vector from_string(std::string_view s) {
        Gf4Vector v(static_cast<int>(s.size()));
        for (int i = 0; i < v.n_; ++i) v.set(i, Gf4::from_char(s[static_cast<size_t>(i)]));
        return v;
    }

    std::string to_string() const {
        std::string s(static_cast<size_t>(n_), '0');
        for (int i = 0; i < n_; ++i) s[static_cast<size_t>(i)] = at(i).to_char();
        return s;
    }

    int length() const { return n_; }
    std::uint32_t mu_mask() const { return mu_; }
    std::uint32_t nu_mask() const { return nu_; }

    Gf4 at(int i) const {
        check_index(i);
        return Gf4((mu_ >> i) & 1u, (nu_ >> i) & 1u);
    }

    void set(int i, Gf4 x) {
        check_index(i);
        mu_ = (mu_ & ~(1u << i)) | (x.mu() << i);
        nu_ = (nu_ & ~(1u << i)) | (x.nu() << i);
    }

    std::uint32_t support_mask() const { return mu_ | nu_; }
    int weight() const { return std::popcount(support_mask()); }
    bool is_zero() const { return (mu_ | nu_) == 0; }

    friend Gf4Vector operator+(const Gf4Vector& a, const Gf4Vector& b) {
        check_same_length(a, b);
        return Gf4Vector(a.n_, a.mu_ ^ b.mu_, a.nu_ ^ b.nu_);
    }

    // Trace inner product  x * y = sum_i Tr(x_i conj(y_i))  in GF(2).
    // In (mu, nu) coordinates this is the symplectic form
    // parity(mu_x & nu_y) + parity(nu_x & mu_y).
    unsigned star(const Gf4Vector& other) const {
        check_same_length(*this, other);
        return static_cast<unsigned>(std::popcount((mu_ & other.nu_) ^ (nu_ & other.mu_))) & 1u;
    }

    friend bool operator==(const Gf4Vector& a, const Gf4Vector& b) = default;

    static constexpr std::uint32_t live_mask(int n) {
        return n >= 32 ? ~0u : (1u << n) - 1u;
    }

  private:
    static int check_length(int n) {
        if (n < 1 || n > kMaxLength)
            throw std::invalid_argument("vector length must be in [1, 32], got " + std::to_string(n));
        return n;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("coordinate index " + std::to_string(i) + " out of range for length " +
                                    std::to_string(n_));
    }

    static void check_same_length(const Gf4Vector& a, const Gf4Vector& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("vector length mismatch: " + std::to_string(a.n_) + " vs " +
                                        std::to_string(b.n_));
    }

    int n_;
    std::uint32_t mu_ = 0;
    std::uint32_t nu_ = 0;
};

inline unsigned star(const Gf4Vector& a, const Gf4Vector& b) { return a.star(b); }

}  // namespace qecenum
