#include <catch2/catch_amalgamated.hpp>

#include "diobound/candidates.hpp"
#include "support/oracles.hpp"

using namespace diobound;
using I64 = std::int64_t;

namespace {

bool stream_contains(const std::vector<Tuple<I64>>& v, const Tuple<I64>& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
}

} // namespace

TEST_CASE("restricted stream applies distinctness and descending filters") {
    CandidateFilter<I64> f{2, 4, 16, true, true};
    auto out = collect_candidates(f);
    CHECK(stream_contains(out, {5, 2}));
    CHECK(stream_contains(out, {-5, 4}));
    CHECK_FALSE(stream_contains(out, {5, 5}));
    CHECK_FALSE(stream_contains(out, {2, 5}));
    for (const auto& t : out) {
        CHECK(pairwise_distinct(t));
        CHECK(descending_abs(t));
        I64 a = std::abs(t[0]);
        CHECK(a > 4);
        CHECK(a <= 16);
        CHECK(max_norm(t) == a);
    }
}

TEST_CASE("code-faithful stream is the full shell") {
    CandidateFilter<I64> f{2, 4, 5, false, false};
    auto out = collect_candidates(f);
    CHECK(out.size() == 40); // (2*5+1)^2 - (2*5-1)^2
    for (const auto& t : out) CHECK(max_norm(t) == 5);
}

TEST_CASE("dimension one restricted stream") {
    CandidateFilter<I64> f{1, 1, 2, true, true};
    CHECK(collect_candidates(f) == std::vector<Tuple<I64>>{{-2}, {2}});
}

TEST_CASE("streams are strictly increasing in the enumeration order") {
    for (bool restricted : {true, false}) {
        CandidateFilter<I64> f{3, 2, 4, restricted, restricted};
        auto out = collect_candidates(f);
        REQUIRE(out.size() > 1);
        for (std::size_t idx = 0; idx + 1 < out.size(); ++idx)
            CHECK(order_cmp(out[idx], out[idx + 1]) == std::strong_ordering::less);
    }
}

TEST_CASE("restricted engine equals filtering the full stream") {
    for (unsigned n = 1; n <= 3; ++n) {
        CandidateFilter<I64> restricted{n, 1, 4, true, true};
        CandidateFilter<I64> full{n, 1, 4, false, false};
        auto fast = collect_candidates(restricted);
        std::vector<Tuple<I64>> slow;
        for (const auto& t : collect_candidates(full))
            if (pairwise_distinct(t) && descending_abs(t)) slow.push_back(t);
        CHECK(fast == slow);
    }
}

TEST_CASE("single-flag modes filter pointwise") {
    CandidateFilter<I64> distinct_only{2, 1, 3, true, false};
    for (const auto& t : collect_candidates(distinct_only)) CHECK(pairwise_distinct(t));

    CandidateFilter<I64> descending_only{2, 1, 3, false, true};
    auto desc = collect_candidates(descending_only);
    CHECK(stream_contains(desc, {2, 2})); // repeats allowed without the distinct flag
    for (const auto& t : desc) CHECK(descending_abs(t));
}

TEST_CASE("per-shell generation concatenates to the full stream") {
    CandidateFilter<I64> f{2, 2, 6, true, true};
    std::vector<Tuple<I64>> by_shell;
    for (I64 v = 3; v <= 6; ++v)
        for_each_candidate_in_shell(f, v, [&](const Tuple<I64>& t) { by_shell.push_back(t); });
    CHECK(by_shell == collect_candidates(f));
}
