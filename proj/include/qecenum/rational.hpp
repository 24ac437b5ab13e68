#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qecenum {

// All enumerator and metric identities in this library are exact, so the
// scalar of record is an arbitrary-precision rational.  Doubles appear only
// when sampling curves on a p-grid or talking to the dense oracle.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    BigInt r = 1;
    for (int i = 1; i <= m; ++i) {
        r *= n - m + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(int e) { return BigInt(1) << e; }

template <class Scalar>
Scalar scalar_pow(Scalar base, int e) {
    Scalar r{1};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "3/8", or just "3" when the denominator is one.
inline std::string fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

// Thrown when an enumeration or dense operation would exceed a size cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& what_kind, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(what_kind + " size " + std::to_string(required) + " exceeds the cap of " +
                             std::to_string(cap)) {}
};

}  // namespace qecenum
