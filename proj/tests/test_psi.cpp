#include <catch2/catch_amalgamated.hpp>

#include "diobound/json_io.hpp"
#include "diobound/psi.hpp"
#include "support/oracles.hpp"

#include <cstdio>

using namespace diobound;
using I64 = std::int64_t;

namespace {

BudgetPolicy quick_policy() {
    BudgetPolicy p;
    p.tiers = {200'000, 2'000'000};
    return p;
}

PsiReport<I64> run(unsigned n, I64 lo, I64 hi, bool restricted, PsiRunOptions opts = {}) {
    CandidateFilter<I64> f{n, lo, hi, restricted, restricted};
    return verify_psi(n, f, quick_policy(), opts);
}

} // namespace

TEST_CASE("dimension 2 window is fully witnessed, both modes") {
    auto restricted = run(2, 4, 16, true);
    CHECK(restricted.unresolved.empty());
    CHECK(restricted.candidates_checked ==
          restricted.trivially_satisfied + restricted.witnessed_constructive +
              restricted.witnessed_bruteforce);
    CHECK(restricted.candidates_checked == 504); // sum over shells of 2 signs * 2v choices

    auto faithful = run(2, 4, 16, false);
    CHECK(faithful.unresolved.empty());
    CHECK(faithful.candidates_checked == 1008); // full shells 5..16
    CHECK(faithful.candidates_checked > restricted.candidates_checked);
}

TEST_CASE("dimension 3 subwindow is fully witnessed") {
    auto r = run(3, 16, 32, true);
    CHECK(r.unresolved.empty());
    CHECK(r.candidates_checked > 0);
    CHECK(r.distinct_signatures() > 0);
    CHECK(r.candidates_checked ==
          r.trivially_satisfied + r.witnessed_constructive + r.witnessed_bruteforce);
}

TEST_CASE("counts are independent of the worker count and memoization") {
    PsiRunOptions one;
    one.workers = 1;
    PsiRunOptions four;
    four.workers = 4;
    PsiRunOptions bare;
    bare.memo = false;

    auto a = run(3, 16, 24, true, one);
    auto b = run(3, 16, 24, true, four);
    auto c = run(3, 16, 24, true, bare);
    CHECK(psi_report_json(a).dump() == psi_report_json(b).dump());
    CHECK(psi_report_json(a).dump() == psi_report_json(c).dump());
}

TEST_CASE("shard reports union to the full report") {
    auto full = run(2, 4, 16, true);
    std::uint64_t candidates = 0, trivial = 0, constructive = 0, bruteforce = 0;
    std::set<std::string> sigs;
    for (unsigned shard = 0; shard < 3; ++shard) {
        PsiRunOptions opts;
        opts.shards = 3;
        opts.shard_index = shard;
        auto part = run(2, 4, 16, true, opts);
        candidates += part.candidates_checked;
        trivial += part.trivially_satisfied;
        constructive += part.witnessed_constructive;
        bruteforce += part.witnessed_bruteforce;
        sigs.insert(part.signatures.begin(), part.signatures.end());
        CHECK(part.unresolved.empty());
    }
    CHECK(candidates == full.candidates_checked);
    CHECK(trivial == full.trivially_satisfied);
    CHECK(constructive == full.witnessed_constructive);
    CHECK(bruteforce == full.witnessed_bruteforce);
    CHECK(sigs == full.signatures);
}

TEST_CASE("interrupted runs resume to identical reports") {
    const std::string path = "test_psi_checkpoint.json";
    std::remove(path.c_str());

    auto uninterrupted = run(3, 16, 28, true);

    PsiRunOptions first;
    first.checkpoint_path = path;
    first.halt_after_shells = 5;
    auto partial = run(3, 16, 28, true, first);
    CHECK(partial.candidates_checked < uninterrupted.candidates_checked);

    PsiRunOptions second;
    second.checkpoint_path = path;
    auto resumed = run(3, 16, 28, true, second);
    CHECK(psi_report_json(resumed).dump() == psi_report_json(uninterrupted).dump());
    std::remove(path.c_str());
}

TEST_CASE("checkpoints from another configuration are rejected") {
    const std::string path = "test_psi_checkpoint2.json";
    std::remove(path.c_str());
    PsiRunOptions opts;
    opts.checkpoint_path = path;
    opts.halt_after_shells = 2;
    run(3, 16, 28, true, opts);

    CandidateFilter<I64> other{3, 16, 64, true, true};
    PsiRunOptions resume;
    resume.checkpoint_path = path;
    CHECK_THROWS_AS(verify_psi(3, other, quick_policy(), resume), checkpoint_mismatch);
    std::remove(path.c_str());
}

TEST_CASE("window validation") {
    CandidateFilter<I64> below{2, 2, 16, true, true};
    CHECK_THROWS_AS(verify_psi(2, below, quick_policy()), contract_violation);
    CandidateFilter<I64> above{2, 4, 300, true, true};
    CHECK_THROWS_AS(verify_psi(2, above, quick_policy()), contract_violation);
    CandidateFilter<I64> inverted{2, 12, 8, true, true};
    CHECK_THROWS_AS(verify_psi(2, inverted, quick_policy()), contract_violation);
    CandidateFilter<I64> mismatched{3, 4, 16, true, true};
    CHECK_THROWS_AS(verify_psi(2, mismatched, quick_policy()), contract_violation);
    PsiRunOptions bad_shard;
    bad_shard.shards = 2;
    bad_shard.shard_index = 2;
    CandidateFilter<I64> ok{2, 4, 16, true, true};
    CHECK_THROWS_AS(verify_psi(2, ok, quick_policy(), bad_shard), contract_violation);
}

TEST_CASE("memo certificates agree with direct search on samples") {
    // scan a window twice the size of the memo spot-check sampling window
    // and then re-derive a handful of verdicts directly
    auto r = run(3, 16, 26, true);
    CHECK(r.unresolved.empty());
    std::mt19937_64 rng(97);
    CandidateFilter<I64> f{3, 16, 26, true, true};
    std::vector<Tuple<I64>> nontrivial;
    for_each_candidate(f, [&](const Tuple<I64>& t) {
        if (has_any_add_mul_relation(t) && rng() % 64 == 0) nontrivial.push_back(t);
    });
    for (const auto& x : nontrivial) {
        auto direct = find_witness(x, max_norm(x), std::uint64_t(2'000'000));
        CHECK(direct.witnessed());
        if (direct.witnessed()) CHECK(oracle::check_witness(x, direct.witness, max_norm(x)));
    }
}
