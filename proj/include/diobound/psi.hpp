#ifndef DIOBOUND_PSI_HPP
#define DIOBOUND_PSI_HPP

// Verification of the bounded statements over a candidate window: run the
// witness search for every candidate with threshold |x1| and aggregate
// the outcomes.
//
// The signature memo collapses repeated work: for a fixed (signature,
// threshold, budget) the witness search's status and strategy do not
// depend on which tuple carried the signature (see witness.hpp), so one
// computed outcome classifies every later candidate with the same key,
// and a constructive outcome classifies the signature at every threshold
// because strategies 1-4 succeed at all of them. The memo is therefore a
// pure cache: counts are identical with it on or off, across any worker
// count, shard split or interrupt/resume pattern.
//
// Work is partitioned by |x1| (one shell of candidates per unit), merged
// in shell order, and checkpointed at chunk boundaries.

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "diobound/candidates.hpp"
#include "diobound/checkpoint.hpp"
#include "diobound/concurrency.hpp"
#include "diobound/witness.hpp"

namespace diobound {

struct BudgetPolicy {
    std::vector<std::uint64_t> tiers{1'000'000, 100'000'000};

    std::uint64_t max_budget() const {
        std::uint64_t m = 1;
        for (std::uint64_t t : tiers)
            if (t > m) m = t;
        return m;
    }
};

template <IntegerLike I>
struct PsiReport {
    unsigned n = 0;
    I x1_min = 0, x1_max = 0;
    bool require_distinct = true, require_descending = true;
    std::vector<std::uint64_t> budget_tiers;
    unsigned shards = 1, shard_index = 0;
    std::uint64_t candidates_checked = 0;
    std::uint64_t trivially_satisfied = 0;
    std::uint64_t witnessed_constructive = 0;
    std::uint64_t witnessed_bruteforce = 0;
    std::vector<std::pair<Tuple<I>, std::uint64_t>> unresolved;
    std::set<std::string> signatures; // encoded, nonempty signatures seen
    double wall_seconds = 0;          // reported on stderr only, not part of the canonical output

    std::uint64_t distinct_signatures() const { return signatures.size(); }
};

struct PsiRunOptions {
    unsigned workers = 1;
    unsigned shards = 1;
    unsigned shard_index = 0;
    bool memo = true;
    std::string checkpoint_path;
    std::optional<std::uint64_t> halt_after_shells;
    std::function<void(const std::string&)> progress;
};

namespace detail {

struct MemoEntry {
    bool witnessed = false;
    std::string strategy;
};

class SignatureMemo {
public:
    // nullopt on miss; constructive entries certify every threshold,
    // search-based entries only their own.
    std::optional<MemoEntry> lookup(const std::string& sig_key, const std::string& threshold_key) {
        std::lock_guard lock(m_);
        auto exact = map_.find(sig_key + '|' + threshold_key);
        if (exact != map_.end()) return exact->second;
        auto any = constructive_.find(sig_key);
        if (any != constructive_.end()) return MemoEntry{true, any->second};
        return std::nullopt;
    }

    void store(const std::string& sig_key, const std::string& threshold_key, const MemoEntry& e) {
        std::lock_guard lock(m_);
        map_.emplace(sig_key + '|' + threshold_key, e);
        if (e.witnessed && strategy_is_constructive(e.strategy)) constructive_.emplace(sig_key, e.strategy);
    }

private:
    std::mutex m_;
    std::unordered_map<std::string, MemoEntry> map_;
    std::unordered_map<std::string, std::string> constructive_;
};

template <IntegerLike I>
struct ShellScanResult {
    std::uint64_t candidates = 0, trivial = 0, constructive = 0, bruteforce = 0;
    std::vector<std::pair<Tuple<I>, std::uint64_t>> unresolved;
    std::set<std::string> signatures;
};

template <IntegerLike I>
ShellScanResult<I> scan_shell(const CandidateFilter<I>& filter, const I& v,
                              const BudgetPolicy& policy, bool use_memo, SignatureMemo& memo) {
    ShellScanResult<I> r;
    const std::uint64_t budget = policy.max_budget();
    for_each_candidate_in_shell(filter, v, [&](const Tuple<I>& x) {
        ++r.candidates;
        if (!has_any_add_mul_relation(x)) {
            ++r.trivial;
            return;
        }
        const std::vector<Equation> sig = add_mul_signature(x);
        const std::string sig_key = encode_signature(sig);
        r.signatures.insert(sig_key);
        const I threshold = abs_of(x[0]);
        const std::string threshold_key = to_decimal(threshold);

        MemoEntry entry;
        bool from_memo = false;
        if (use_memo) {
            if (auto hit = memo.lookup(sig_key, threshold_key)) {
                entry = *hit;
                from_memo = true;
            }
        }
        if (!from_memo) {
            WitnessOutcome<I> out = find_witness(x, threshold, budget);
            entry.witnessed = out.witnessed();
            entry.strategy = out.strategy;
            if (use_memo) memo.store(sig_key, threshold_key, entry);
        } else if (fnv1a64(sig_key + '|' + threshold_key + '|' + format_tuple(x)) % 1024 == 0) {
            // soundness spot check: a certified candidate must also pass a
            // direct search
            WitnessOutcome<I> direct = find_witness(x, threshold, budget);
            if (direct.witnessed() != entry.witnessed)
                throw std::logic_error("signature memo disagrees with direct witness search for " +
                                       format_tuple(x));
        }

        if (!entry.witnessed)
            r.unresolved.emplace_back(x, budget);
        else if (strategy_is_constructive(entry.strategy))
            ++r.constructive;
        else
            ++r.bruteforce;
    });
    return r;
}

} // namespace detail

inline std::string psi_fingerprint(unsigned n, const std::string& lo, const std::string& hi,
                                   bool distinct, bool descending, const BudgetPolicy& policy,
                                   unsigned shards, unsigned shard_index) {
    std::string cfg = "psi|" + std::to_string(n) + '|' + lo + '|' + hi + '|' +
                      (distinct ? "d1" : "d0") + (descending ? "s1" : "s0") + '|';
    for (std::uint64_t t : policy.tiers) cfg += std::to_string(t) + ',';
    cfg += '|' + std::to_string(shards) + '/' + std::to_string(shard_index) + "|v" +
           std::to_string(checkpoint_schema_version);
    return fingerprint_of(cfg);
}

template <IntegerLike I>
PsiReport<I> verify_psi(unsigned n, const CandidateFilter<I>& filter, const BudgetPolicy& policy,
                        const PsiRunOptions& opts = {}) {
    if (filter.n != n) throw contract_violation("filter dimension does not match n");
    if (filter.x1_abs_min > filter.x1_abs_max)
        throw contract_violation("candidate window is not well-ordered");
    if (to_bigint(filter.x1_abs_min) < shell_lower(n) ||
        to_bigint(filter.x1_abs_max) > shell_upper(n))
        throw contract_violation("candidate window must lie within (2^(2^(n-1)), 2^(2^n)]");
    if (opts.shard_index >= opts.shards) throw contract_violation("shard index out of range");
    if (opts.workers < 1) throw contract_violation("worker count must be >= 1");

    PsiReport<I> report;
    report.n = n;
    report.x1_min = filter.x1_abs_min;
    report.x1_max = filter.x1_abs_max;
    report.require_distinct = filter.require_distinct;
    report.require_descending = filter.require_descending_abs;
    report.budget_tiers = policy.tiers;
    report.shards = opts.shards;
    report.shard_index = opts.shard_index;

    const std::string fp =
        psi_fingerprint(n, to_decimal(filter.x1_abs_min), to_decimal(filter.x1_abs_max),
                        filter.require_distinct, filter.require_descending_abs, policy,
                        opts.shards, opts.shard_index);

    I first_shell = filter.x1_abs_min + 1;
    if (!opts.checkpoint_path.empty()) {
        std::ifstream probe(opts.checkpoint_path);
        if (probe.good()) {
            Checkpoint c = load_checkpoint(opts.checkpoint_path, fp);
            report.candidates_checked = c.candidates_checked;
            report.trivially_satisfied = c.trivially_satisfied;
            report.witnessed_constructive = c.witnessed_constructive;
            report.witnessed_bruteforce = c.witnessed_bruteforce;
            for (const auto& [csv, budget] : c.unresolved)
                report.unresolved.emplace_back(parse_tuple<I>(csv), budget);
            report.signatures.insert(c.signatures.begin(), c.signatures.end());
            first_shell = from_bigint<I>(parse_bigint(c.last_completed_x1)) + 1;
            if (opts.progress)
                opts.progress("resuming after completed shell " + c.last_completed_x1);
        }
    }

    const BigInt shells_big = to_bigint(filter.x1_abs_max) - to_bigint(first_shell) + 1;
    if (shells_big <= 0) return report;
    if (shells_big > BigInt(1) << 40)
        throw budget_exceeded("candidate window spans more than 2^40 shells");
    const std::uint64_t shell_count = from_bigint<std::int64_t>(shells_big);
    const std::uint64_t chunk_size = shell_count <= 4096 ? 1 : (shell_count + 4095) / 4096;
    const std::size_t chunk_count =
        static_cast<std::size_t>((shell_count + chunk_size - 1) / chunk_size);

    detail::SignatureMemo memo;
    std::uint64_t shells_done = 0;

    auto chunk_task = [&](std::size_t c) -> detail::ShellScanResult<I> {
        detail::ShellScanResult<I> acc;
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t end = std::min<std::uint64_t>(shell_count, begin + chunk_size);
        for (std::uint64_t s = begin; s < end; ++s) {
            const BigInt v_big = to_bigint(first_shell) + s;
            const BigInt offset = v_big - to_bigint(filter.x1_abs_min) - 1;
            if (opts.shards > 1 &&
                mpz_class(offset % opts.shards).get_ui() != opts.shard_index)
                continue;
            const I v = from_bigint<I>(v_big);
            auto one = detail::scan_shell(filter, v, policy, opts.memo, memo);
            acc.candidates += one.candidates;
            acc.trivial += one.trivial;
            acc.constructive += one.constructive;
            acc.bruteforce += one.bruteforce;
            for (auto& u : one.unresolved) acc.unresolved.push_back(std::move(u));
            acc.signatures.merge(one.signatures);
        }
        return acc;
    };

    auto merge = [&](std::size_t c, detail::ShellScanResult<I>&& r) -> bool {
        report.candidates_checked += r.candidates;
        report.trivially_satisfied += r.trivial;
        report.witnessed_constructive += r.constructive;
        report.witnessed_bruteforce += r.bruteforce;
        for (auto& u : r.unresolved) report.unresolved.push_back(std::move(u));
        report.signatures.merge(r.signatures);

        const std::uint64_t chunk_end = std::min<std::uint64_t>(shell_count, (c + 1) * chunk_size);
        const BigInt last_shell = to_bigint(first_shell) + (chunk_end - 1);
        shells_done = chunk_end;

        if (!opts.checkpoint_path.empty()) {
            Checkpoint cp;
            cp.fingerprint = fp;
            cp.last_completed_x1 = last_shell.get_str();
            cp.candidates_checked = report.candidates_checked;
            cp.trivially_satisfied = report.trivially_satisfied;
            cp.witnessed_constructive = report.witnessed_constructive;
            cp.witnessed_bruteforce = report.witnessed_bruteforce;
            for (const auto& [tuple, budget] : report.unresolved)
                cp.unresolved.emplace_back(format_tuple(tuple), budget);
            cp.signatures.assign(report.signatures.begin(), report.signatures.end());
            save_checkpoint(opts.checkpoint_path, cp);
        }
        if (opts.progress)
            opts.progress("shells up to " + last_shell.get_str() + " done, " +
                          std::to_string(report.candidates_checked) + " candidates, " +
                          std::to_string(report.unresolved.size()) + " unresolved");
        return !(opts.halt_after_shells && shells_done >= *opts.halt_after_shells);
    };

    run_ordered<detail::ShellScanResult<I>>(chunk_count, opts.workers, chunk_task, merge);
    return report;
}

} // namespace diobound

#endif
