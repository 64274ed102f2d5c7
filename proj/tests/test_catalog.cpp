#include <catch2/catch_amalgamated.hpp>

#include "diobound/catalog.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace diobound;
using I64 = std::int64_t;

TEST_CASE("membership verdicts on fixed tuples") {
    auto yes = membership<I64>({2, 4}, 256);
    CHECK(yes.in_tn);
    CHECK(yes.canonical == System(2, {add(1, 1, 2), mul(1, 1, 2)}));
    CHECK(yes.solutions_found == std::vector<Tuple<I64>>{{0, 0}, {2, 4}});

    auto no = membership<I64>({3, 5}, 256);
    CHECK_FALSE(no.in_tn);
    CHECK(no.canonical.empty());
    REQUIRE(no.solutions_found.size() == 1);
    CHECK(max_norm(no.solutions_found.front()) > 4);

    auto triple = membership<I64>({2, 4, 16}, 256);
    CHECK(triple.in_tn);
    CHECK(triple.solutions_found == std::vector<Tuple<I64>>{{0, 0, 0}, {2, 4, 16}});
}

TEST_CASE("membership contracts") {
    CHECK_THROWS_AS(membership<I64>({1, 1, 1, 1}, 256), unsupported_dimension);
    CHECK_THROWS_AS(membership<I64>({2, 4}, 3), contract_violation); // probe below 2^(2^(n-1))
    CHECK_THROWS_AS(catalog<I64>(4), unsupported_dimension);
    CHECK_THROWS_AS(catalog<I64>(0), unsupported_dimension);
}

TEST_CASE("dimension 1 catalog") {
    CHECK(catalog<I64>(1) == std::vector<Tuple<I64>>{{0}, {1}});
}

TEST_CASE("dimension 2 catalog matches the published pairs") {
    // the six pairs, closed under coordinate swap
    std::vector<Tuple<I64>> expected;
    for (Tuple<I64> base : std::vector<Tuple<I64>>{{0, 0}, {1, 1}, {-1, 1}, {0, 1}, {1, 2}, {2, 4}}) {
        expected.push_back(base);
        expected.push_back({base[1], base[0]});
    }
    std::sort(expected.begin(), expected.end(),
              [](const Tuple<I64>& a, const Tuple<I64>& b) { return order_cmp(a, b) < 0; });
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    REQUIRE(expected.size() == 10);

    CHECK(catalog<I64>(2) == expected);
}

TEST_CASE("membership is invariant under coordinate permutation") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 60; ++round) {
        unsigned n = 2 + rng() % 2;
        Tuple<I64> a = oracle::random_tuple<I64>(n, 4, rng);
        bool verdict = membership<I64>(a, 256).in_tn;
        Tuple<I64> p = a;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(membership<I64>(p, 256).in_tn == verdict);
    }
}

TEST_CASE("members solve their canonical systems within the bound") {
    for (unsigned n = 1; n <= 2; ++n) {
        const I64 bound = (n == 1) ? 2 : 4;
        for (const auto& a : catalog<I64>(n)) {
            CHECK(is_solution(a, canonical_system(a)));
            CHECK(max_norm(a) <= bound);
            for (const auto& sol : membership<I64>(a, I64(n == 1 ? 4 : 16)).solutions_found)
                CHECK(max_norm(sol) <= bound);
        }
    }
}

TEST_CASE("probe radius is honored in the verdict") {
    auto v = membership<I64>({2, 4}, 300);
    CHECK(v.probe_radius == 300);
    CHECK(v.in_tn);
}
