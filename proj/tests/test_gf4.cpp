#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "naive_gf4.hpp"
#include "qecenum/gf4.hpp"

using namespace qecenum;

namespace {

Gf4 from_index(int i) {
    constexpr Gf4 table[4] = {Gf4::zero(), Gf4::one(), Gf4::omega(), Gf4::omega_bar()};
    return table[i];
}

int to_index(Gf4 x) {
    if (x == Gf4::zero()) return naive::kZero;
    if (x == Gf4::one()) return naive::kOne;
    if (x == Gf4::omega()) return naive::kOmega;
    return naive::kOmegaBar;
}

Gf4Vector random_vector(std::mt19937_64& gen, int n) {
    Gf4Vector v(n);
    for (int i = 0; i < n; ++i) v.set(i, from_index(static_cast<int>(gen() & 3)));
    return v;
}

naive::Vec to_naive(const Gf4Vector& v) {
    naive::Vec out;
    for (int i = 0; i < v.length(); ++i) out.push_back(to_index(v.at(i)));
    return out;
}

}  // namespace

TEST_CASE("field operations match the defining tables") {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(to_index(from_index(a) + from_index(b)) == naive::kAdd[a][b]);
            CHECK(to_index(from_index(a) * from_index(b)) == naive::kMul[a][b]);
        }
        CHECK(to_index(from_index(a).conj()) == naive::kConj[a]);
        CHECK(static_cast<int>(from_index(a).trace()) == naive::kTrace[a]);
    }
}

TEST_CASE("field examples") {
    CHECK(Gf4::omega() + Gf4::omega_bar() == Gf4::one());
    CHECK(Gf4::omega().trace() == 1);
    CHECK(Gf4::omega() * Gf4::omega() == Gf4::omega_bar());
    CHECK(Gf4::one().trace() == 0);
    CHECK(Gf4::omega_bar().conj() == Gf4::omega());
    CHECK(Gf4::one().conj() == Gf4::one());
}

TEST_CASE("symbol text alphabet") {
    CHECK(Gf4::from_char('w') == Gf4::omega());
    CHECK(Gf4::from_char('W') == Gf4::omega_bar());
    CHECK(Gf4::omega_bar().to_char() == 'W');
    CHECK_THROWS_AS(Gf4::from_char('x'), std::invalid_argument);
}

TEST_CASE("trace inner product agrees with the literal sum on all symbol pairs") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Gf4Vector x(1), y(1);
            x.set(0, from_index(a));
            y.set(0, from_index(b));
            const int literal = naive::kTrace[naive::kMul[a][naive::kConj[b]]];
            CHECK(static_cast<int>(x.star(y)) == literal);
        }
}

TEST_CASE("trace inner product agrees with the literal sum on random vectors") {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 16);
        const Gf4Vector x = random_vector(gen, n);
        const Gf4Vector y = random_vector(gen, n);
        CHECK(static_cast<int>(x.star(y)) == naive::star(to_naive(x), to_naive(y)));
    }
}

TEST_CASE("trace inner product is symmetric, biadditive and alternating") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 12);
        const Gf4Vector x = random_vector(gen, n);
        const Gf4Vector y = random_vector(gen, n);
        const Gf4Vector z = random_vector(gen, n);
        CHECK(x.star(y) == y.star(x));
        CHECK((x + y).star(z) == (x.star(z) ^ y.star(z)));
        CHECK(x.star(x) == 0);
    }
}

TEST_CASE("weight and support") {
    const auto v = Gf4Vector::from_string("00Www");
    CHECK(v.weight() == 3);
    CHECK(v.support_mask() == 0b11100u);

    CHECK(Gf4Vector::from_string("wWWw0").weight() == 4);
    CHECK(Gf4Vector(5).weight() == 0);
    CHECK(Gf4Vector(5).support_mask() == 0);
}

TEST_CASE("vector text round trip and errors") {
    const std::string text = "0w1WW0w";
    CHECK(Gf4Vector::from_string(text).to_string() == text);
    CHECK_THROWS_AS(Gf4Vector::from_string("01x"), std::invalid_argument);
    CHECK_THROWS_AS(Gf4Vector(0), std::invalid_argument);
    CHECK_THROWS_AS(Gf4Vector(33), std::invalid_argument);

    const Gf4Vector a(3), b(4);
    CHECK_THROWS_AS(a.star(b), std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a.at(3), std::out_of_range);
}

TEST_CASE("zero vector annihilates everything") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 16);
        CHECK(Gf4Vector(n).star(random_vector(gen, n)) == 0);
    }
}

TEST_CASE("single-coordinate evaluation: star of omega and omega-bar") {
    Gf4Vector x(1), y(1);
    x.set(0, Gf4::omega());
    y.set(0, Gf4::omega_bar());
    CHECK(x.star(y) == 1);
}
