#include <catch2/catch_amalgamated.hpp>

#include "diobound/loop.hpp"
#include "support/oracles.hpp"

using namespace diobound;

namespace {

std::vector<SweepEvent> sweep_events(std::uint64_t max_steps) {
    std::vector<SweepEvent> events;
    run_sweep(max_steps, [&](const SweepEvent& e) { events.push_back(e); });
    return events;
}

} // namespace

TEST_CASE("a single step only truncates") {
    auto events = sweep_events(1);
    REQUIRE(events.size() == 1);
    CHECK(events.front().kind == SweepEvent::Kind::truncated);
    CHECK(events.front().steps_used == 1);
    CHECK_THROWS_AS(run_sweep(0, [](const SweepEvent&) {}), contract_violation);
}

TEST_CASE("the start tuple (-5,-5) is not printed") {
    auto events = sweep_events(50);
    for (const auto& e : events) {
        if (e.kind == SweepEvent::Kind::candidate) CHECK(e.x != Tuple<BigInt>(2, BigInt(-5)));
    }
}

TEST_CASE("the first window closes after exactly 1008 advances") {
    auto events = sweep_events(400'000);
    bool found_dimension = false;
    std::uint64_t candidates_before = 0;
    for (const auto& e : events) {
        if (e.kind == SweepEvent::Kind::dimension) {
            CHECK(e.n == 2);
            CHECK(e.tuples_advanced == 1008);
            found_dimension = true;
            break;
        }
        if (e.kind == SweepEvent::Kind::candidate) ++candidates_before;
    }
    REQUIRE(found_dimension);

    // 1008 = sum of the shell sizes (2b+1)^2 - (2b-1)^2 for b = 5..16
    BigInt total = 0;
    for (long b = 5; b <= 16; ++b) total += shell_size(2, b);
    CHECK(total == 1008);

    // candidates printed = tuples in those shells satisfying a relation
    std::uint64_t expected_candidates = 0;
    Tuple<BigInt> t = shell_first<BigInt>(2, BigInt(5));
    while (max_norm(t) <= 16) {
        if (has_any_add_mul_relation(t)) ++expected_candidates;
        successor_in_place(t);
    }
    CHECK(candidates_before == expected_candidates);
}

TEST_CASE("every printed pair passes the independent checker") {
    auto events = sweep_events(400'000);
    std::size_t pairs = 0;
    for (const auto& e : events) {
        if (e.kind != SweepEvent::Kind::witness_pair) continue;
        ++pairs;
        CHECK(oracle::check_witness(e.x, e.y, BigInt(max_norm(e.x))));
        CHECK(has_any_add_mul_relation(e.x));
    }
    CHECK(pairs > 50);
}

TEST_CASE("candidate and pair events come in matched order") {
    auto events = sweep_events(200'000);
    std::optional<Tuple<BigInt>> open_candidate;
    for (const auto& e : events) {
        if (e.kind == SweepEvent::Kind::candidate) {
            CHECK_FALSE(open_candidate.has_value());
            open_candidate = e.x;
        } else if (e.kind == SweepEvent::Kind::witness_pair) {
            REQUIRE(open_candidate.has_value());
            CHECK(*open_candidate == e.x);
            open_candidate.reset();
        }
    }
}

TEST_CASE("truncation reports the resumable scan state") {
    auto events = sweep_events(5'000);
    REQUIRE(!events.empty());
    const SweepEvent& last = events.back();
    CHECK(last.kind == SweepEvent::Kind::truncated);
    CHECK(last.steps_used == 5'000);
    CHECK(last.x.size() == 2);
    CHECK(last.y.size() == 2); // scan position
    CHECK(max_norm(last.y) > max_norm(last.x));
}
