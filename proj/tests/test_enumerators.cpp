#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <map>
#include <set>

#include "naive_gf4.hpp"
#include "qecenum/catalog.hpp"
#include "qecenum/enumerators.hpp"

using namespace qecenum;

namespace {

std::vector<naive::Vec> naive_rows(const AdditiveCode& code) {
    std::vector<naive::Vec> rows;
    for (const auto& g : code.generators()) rows.push_back(naive::from_string(g.to_string()));
    return rows;
}

}  // namespace

TEST_CASE("Shor-Laflamme enumerators of G5 (frozen against the naive span)") {
    const auto e = enumerator_set(catalog("G5"));
    CHECK(e.a.counts == std::vector<std::uint64_t>{1, 0, 0, 0, 15, 0});
    CHECK(e.b.counts == std::vector<std::uint64_t>{1, 0, 0, 30, 15, 18});
}

TEST_CASE("Shor-Laflamme enumerators match the naive oracle for small codes") {
    for (const char* name : {"G4a", "G4b", "G5", "G6a", "G6b"}) {
        const auto code = catalog(name);
        const auto e = enumerator_set(code);
        const size_t n = static_cast<size_t>(code.length());

        const auto code_span = naive::span(naive_rows(code), n);
        CHECK(e.a.counts == naive::weight_counts(code_span, n));

        std::vector<naive::Vec> dual_rows;
        for (const auto& g : code.dual_generators()) dual_rows.push_back(naive::from_string(g.to_string()));
        const auto dual_span = naive::span(dual_rows, n);
        CHECK(e.b.counts == naive::weight_counts(dual_span, n));
    }
}

TEST_CASE("normalization and impurity") {
    for (const auto& name : catalog_names()) {
        const auto e = enumerator_set(catalog(name));
        CHECK(e.a.counts[0] == 1);
        CHECK(e.b.counts[0] == 1);
        CHECK(e.a.total() == (std::uint64_t(1) << (e.n - e.k)));
        CHECK(e.b.total() == (std::uint64_t(1) << (e.n + e.k)));
    }
    // the impure Shor code has low-weight stabilizer elements
    CHECK(enumerator_set(catalog("G9c")).a.counts[2] > 0);
}

TEST_CASE("Rains transform") {
    const auto e = enumerator_set(catalog("G5"));
    SECTION("m = 0 reproduces the count") {
        for (const auto& name : catalog_names()) {
            const auto es = enumerator_set(catalog(name));
            CHECK(es.a_rains[0] == 1);
            CHECK(es.b_rains[0] == 1);
        }
    }
    SECTION("frozen G5 values") {
        CHECK(e.a_rains[2] == Rational(5, 2));
        CHECK(e.a_rains == std::vector<Rational>{1, Rational(5, 2), Rational(5, 2), Rational(5, 4),
                                                 Rational(5, 4), Rational(1, 2)});
        CHECK(e.b_rains == std::vector<Rational>{1, Rational(5, 2), Rational(5, 2), 5, 5, 2});
    }
    SECTION("B'_m = K A'_{n-m} on G7b and the whole catalog") {
        for (const auto& name : catalog_names()) {
            const auto es = enumerator_set(catalog(name));
            for (int m = 0; m <= es.n; ++m)
                REQUIRE(es.b_rains[static_cast<size_t>(m)] ==
                        Rational(es.K()) * es.a_rains[static_cast<size_t>(es.n - m)]);
        }
    }
    SECTION("positivity B'_m >= A'_m > 0") {
        for (const auto& name : catalog_names()) {
            const auto es = enumerator_set(catalog(name));
            for (int m = 0; m <= es.n; ++m) {
                REQUIRE(es.a_rains[static_cast<size_t>(m)] > 0);
                REQUIRE(es.b_rains[static_cast<size_t>(m)] >= es.a_rains[static_cast<size_t>(m)]);
            }
        }
    }
}

TEST_CASE("subset enumerators") {
    const auto g5 = catalog("G5");
    SECTION("empty subset") {
        const auto s = subset_enumerators(g5, 0);
        CHECK(s.a == 1);
        CHECK(s.b == 1);
    }
    SECTION("full subset counts the whole span") {
        for (const char* name : {"G4a", "G5", "G8c"}) {
            const auto code = catalog(name);
            const int n = code.length(), k = code.dimension_k();
            const auto s = subset_enumerators(code, Gf4Vector::live_mask(n));
            CHECK(s.a == Rational(pow2(n - k), pow2(n)));
            CHECK(s.b == Rational(pow2(n + k), pow2(n)));
        }
    }
    SECTION("G5: every 2-subset gives A' = B' = 1/4") {
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            if (std::popcount(mask) != 2) continue;
            const auto s = subset_enumerators(g5, mask);
            CHECK(s.a == Rational(1, 4));
            CHECK(s.b == Rational(1, 4));
        }
    }
    SECTION("G5: every 3-subset contains undetectable errors, A' = 1/8 and B' = 1/2") {
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            if (std::popcount(mask) != 3) continue;
            const auto s = subset_enumerators(g5, mask);
            CHECK(s.a == Rational(1, 8));
            CHECK(s.b == Rational(1, 2));
        }
    }
    SECTION("counts match the naive oracle on every subset of small codes") {
        for (const char* name : {"G4a", "G4b", "G5", "G6a"}) {
            const auto code = catalog(name);
            const size_t n = static_cast<size_t>(code.length());
            const auto code_span = naive::span(naive_rows(code), n);
            std::vector<naive::Vec> dual_rows;
            for (const auto& g : code.dual_generators())
                dual_rows.push_back(naive::from_string(g.to_string()));
            const auto dual_span = naive::span(dual_rows, n);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                const auto s = subset_enumerators(code, mask);
                const BigInt scale = pow2(std::popcount(mask));
                REQUIRE(s.a == Rational(BigInt(naive::count_supported(code_span, mask)), scale));
                REQUIRE(s.b == Rational(BigInt(naive::count_supported(dual_span, mask)), scale));
            }
        }
    }
    SECTION("index out of range") {
        CHECK_THROWS_AS(subset_enumerators(g5, 1u << 5), std::out_of_range);
    }
}

TEST_CASE("detectability on subsets") {
    const auto g5 = catalog("G5");
    CHECK(detectable_on_subset(g5, 0));
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        const int size = std::popcount(mask);
        if (size == 2) CHECK(detectable_on_subset(g5, mask));
        if (size == 3) CHECK_FALSE(detectable_on_subset(g5, mask));
    }
}

TEST_CASE("relation B'_S = K A'_{S complement}, exhaustive for n <= 8") {
    for (const auto& name : catalog_names()) {
        const auto code = catalog(name);
        const int n = code.length();
        if (n > 8) continue;
        const Rational K{std::uint64_t(1) << code.dimension_k()};
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto s = subset_enumerators(code, mask);
            const auto sc = subset_enumerators(code, ~mask & Gf4Vector::live_mask(n));
            REQUIRE(s.b == K * sc.a);
        }
    }
}

TEST_CASE("subset monotonicity on nested chains") {
    for (const char* name : {"G5", "G7a", "G8b"}) {
        const auto code = catalog(name);
        const int n = code.length();
        // grow a chain one coordinate at a time
        std::uint32_t small = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t big = small | (1u << i);
            const auto lo = subset_enumerators(code, small);
            const auto hi = subset_enumerators(code, big);
            const int gap = std::popcount(big) - std::popcount(small);
            const Rational factor = Rational(pow2(gap));
            REQUIRE(lo.a / factor <= hi.a);
            REQUIRE(hi.a <= lo.a * factor);
            REQUIRE(lo.b / factor <= hi.b);
            REQUIRE(hi.b <= lo.b * factor);
            small = big;
        }
    }
}

TEST_CASE("A'_m equals the sum of A'_S over subsets of size m") {
    for (const char* name : {"G4b", "G5", "G6a", "G7b"}) {
        const auto code = catalog(name);
        const auto e = enumerator_set(code);
        const int n = code.length();
        std::vector<Rational> a_direct(static_cast<size_t>(n) + 1), b_direct(static_cast<size_t>(n) + 1);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto s = subset_enumerators(code, mask);
            a_direct[static_cast<size_t>(std::popcount(mask))] += s.a;
            b_direct[static_cast<size_t>(std::popcount(mask))] += s.b;
        }
        CHECK(a_direct == e.a_rains);
        CHECK(b_direct == e.b_rains);
    }
}

TEST_CASE("distance via enumerators") {
    CHECK(distance_via_enumerators(catalog("G5")) == 3);
    CHECK(distance_via_enumerators(catalog("G11")) == 5);
    CHECK(distance_via_enumerators(catalog("G9c")) == 3);
    for (const auto& name : catalog_names())
        CHECK(distance_via_enumerators(catalog(name)) == parameters(catalog(name)).d);
    // self-dual code: falls back to the minimum nonzero weight convention
    const auto selfdual = direct_sum(single_block(Gf4::one()), single_block(Gf4::one()));
    CHECK(distance_via_enumerators(selfdual) == 1);
}

TEST_CASE("coset table of G5") {
    const auto g5 = catalog("G5");
    const auto table = coset_table(g5);
    CHECK(table.syndrome_count() == 16);
    CHECK(table.class_count() == 4);

    SECTION("the (0,0) cell is the code's own distribution") {
        CHECK(table.at(0, 0).counts == std::vector<std::uint64_t>{1, 0, 0, 0, 15, 0});
        CHECK(table.representative(0, 0).is_zero());
    }
    SECTION("the table partitions GF(4)^5") {
        std::uint64_t total = 0;
        for (std::uint32_t s = 0; s < 16; ++s)
            for (std::uint32_t L = 0; L < 4; ++L) total += table.at(s, L).total();
        CHECK(total == 1024);
    }
    SECTION("syndrome-0 cells together reproduce the dual distribution") {
        const auto e = enumerator_set(g5);
        std::vector<std::uint64_t> marginal(6, 0);
        for (std::uint32_t L = 0; L < 4; ++L)
            for (size_t w = 0; w < 6; ++w) marginal[w] += table.at(0, L).counts[w];
        CHECK(marginal == e.b.counts);
    }
    SECTION("each nonzero syndrome has exactly one class with a weight-1 element") {
        for (std::uint32_t s = 1; s < 16; ++s) {
            int classes_with_weight1 = 0;
            std::uint64_t best_a1 = 0;
            for (std::uint32_t L = 0; L < 4; ++L) {
                if (table.at(s, L).counts[1] > 0) ++classes_with_weight1;
                best_a1 = std::max(best_a1, table.at(s, L).counts[1]);
            }
            CHECK(classes_with_weight1 == 1);
            CHECK(best_a1 == 1);
        }
    }
    SECTION("representatives live in their cells and have minimal weight") {
        for (std::uint32_t s = 0; s < 16; ++s)
            for (std::uint32_t L = 0; L < 4; ++L) {
                const auto& rep = table.representative(s, L);
                const auto& dist = table.at(s, L);
                int min_w = 0;
                while (dist.counts[static_cast<size_t>(min_w)] == 0) ++min_w;
                CHECK(rep.weight() == min_w);
            }
    }
}

TEST_CASE("coset table matches the naive coset partition of GF(4)^n") {
    for (const char* name : {"G4b", "G5"}) {
        const auto code = catalog(name);
        const size_t n = static_cast<size_t>(code.length());
        const auto table = coset_table(code);

        const auto naive_cosets = naive::coset_distributions(naive_rows(code), n);
        std::multiset<std::vector<std::uint64_t>> expected, got;
        for (const auto& [leader, dist] : naive_cosets) expected.insert(dist);
        for (std::uint32_t s = 0; s < table.syndrome_count(); ++s)
            for (std::uint32_t L = 0; L < table.class_count(); ++L) got.insert(table.at(s, L).counts);
        CHECK(expected == got);
    }
}

TEST_CASE("coset Rains coefficients") {
    const auto g5 = catalog("G5");
    const auto table = coset_table(g5);
    SECTION("identity coset at m = 2") {
        CHECK(rains_coefficient(table.at(0, 0), 2) == Rational(5, 2));
    }
    SECTION("weight-1 cosets at m = 2 give exactly 1") {
        for (std::uint32_t s = 1; s < 16; ++s) {
            std::uint32_t best = 0;
            for (std::uint32_t L = 1; L < 4; ++L)
                if (table.at(s, L).counts > table.at(s, best).counts) best = L;
            REQUIRE(table.at(s, best).counts[1] == 1);
            CHECK(rains_coefficient(table.at(s, best), 2) == 1);
        }
    }
    SECTION("m = 0 coefficient is the weight-0 count, 0 or 1") {
        for (std::uint32_t s = 0; s < 16; ++s)
            for (std::uint32_t L = 0; L < 4; ++L) {
                const Rational a0 = rains_coefficient(table.at(s, L), 0);
                CHECK((a0 == 0 || a0 == 1));
                CHECK((a0 == 1) == (s == 0 && L == 0));
            }
    }
}

TEST_CASE("coset table cap") {
    CHECK_THROWS_AS(coset_table(catalog("G5"), 100), CapExceeded);
    CHECK_THROWS_WITH(coset_table(catalog("G5"), 100),
                      Catch::Matchers::ContainsSubstring("cap of 100"));
}
