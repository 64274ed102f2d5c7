#ifndef DIOBOUND_JSON_IO_HPP
#define DIOBOUND_JSON_IO_HPP

// JSON views of the library's value types. Integers are emitted as JSON
// numbers when they fit in 64 bits and as decimal strings beyond that;
// report serialization is canonical (sorted keys, no volatile fields such
// as wall time), so identical configurations produce byte-identical
// documents.

#include <json.hpp>

#include "diobound/catalog.hpp"
#include "diobound/loop.hpp"
#include "diobound/psi.hpp"
#include "diobound/witness.hpp"

namespace diobound {

using json = nlohmann::json;

template <IntegerLike I>
inline json int_json(const I& v) {
    if constexpr (std::same_as<I, std::int64_t>) {
        return v;
    } else {
        const BigInt b = to_bigint(v);
        if (b >= BigInt(std::numeric_limits<long>::min()) &&
            b <= BigInt(std::numeric_limits<long>::max()))
            return static_cast<std::int64_t>(b.get_si());
        return b.get_str();
    }
}

template <IntegerLike I>
inline json tuple_json(const Tuple<I>& t) {
    json arr = json::array();
    for (const I& v : t) arr.push_back(int_json(v));
    return arr;
}

template <IntegerLike I>
inline json witness_outcome_json(const WitnessOutcome<I>& o) {
    json j;
    j["status"] = o.witnessed() ? "witnessed" : "no_witness_within_budget";
    j["witness"] = o.witnessed() ? tuple_json(o.witness) : json(nullptr);
    j["strategy"] = o.witnessed() ? json(o.strategy) : json(nullptr);
    j["steps_used"] = o.steps_used;
    return j;
}

template <IntegerLike I>
inline json psi_report_json(const PsiReport<I>& r) {
    json j;
    j["n"] = r.n;
    j["x1_min"] = to_decimal(r.x1_min);
    j["x1_max"] = to_decimal(r.x1_max);
    j["require_distinct"] = r.require_distinct;
    j["require_descending_abs"] = r.require_descending;
    j["budget_tiers"] = r.budget_tiers;
    j["shards"] = r.shards;
    j["shard_index"] = r.shard_index;
    j["candidates_checked"] = r.candidates_checked;
    j["trivially_satisfied"] = r.trivially_satisfied;
    j["witnessed_constructive"] = r.witnessed_constructive;
    j["witnessed_bruteforce"] = r.witnessed_bruteforce;
    json un = json::array();
    for (const auto& [tuple, budget] : r.unresolved)
        un.push_back({{"tuple", tuple_json(tuple)}, {"budget", budget}});
    j["unresolved"] = std::move(un);
    j["distinct_signatures"] = r.distinct_signatures();
    j["signatures"] = json(r.signatures);
    j["schema_version"] = checkpoint_schema_version;
    return j;
}

template <IntegerLike I>
inline json catalog_json(unsigned n, const std::vector<Tuple<I>>& members) {
    json j;
    j["n"] = n;
    json tuples = json::array();
    for (const auto& t : members) tuples.push_back(tuple_json(t));
    j["tuples"] = std::move(tuples);
    j["count"] = members.size();
    return j;
}

template <IntegerLike I>
inline json membership_json(const MembershipVerdict<I>& v) {
    json j;
    j["tuple"] = tuple_json(v.tuple);
    j["in_tn"] = v.in_tn;
    j["canonical"] = format_system(v.canonical);
    json sols = json::array();
    for (const auto& s : v.solutions_found) sols.push_back(tuple_json(s));
    j["solutions_found"] = std::move(sols);
    j["probe_radius"] = int_json(v.probe_radius);
    return j;
}

inline json sweep_event_json(const SweepEvent& e) {
    json j;
    switch (e.kind) {
    case SweepEvent::Kind::candidate:
        j["event"] = "candidate";
        j["x"] = tuple_json(e.x);
        break;
    case SweepEvent::Kind::witness_pair:
        j["event"] = "witness";
        j["x"] = tuple_json(e.x);
        j["y"] = tuple_json(e.y);
        j["steps"] = e.steps_used;
        break;
    case SweepEvent::Kind::dimension:
        j["event"] = "dimension";
        j["n"] = e.n;
        j["tuples_advanced"] = e.tuples_advanced;
        break;
    case SweepEvent::Kind::truncated:
        j["event"] = "truncated";
        j["x"] = tuple_json(e.x);
        j["b"] = tuple_json(e.y);
        j["tuples_advanced"] = e.tuples_advanced;
        j["steps_used"] = e.steps_used;
        break;
    }
    return j;
}

} // namespace diobound

#endif
