#ifndef DIOBOUND_CHECKPOINT_HPP
#define DIOBOUND_CHECKPOINT_HPP

// Resumable run state, stored as a single JSON document and replaced
// atomically (write to a sibling temp file, then rename) so an
// interrupted writer can never leave a torn checkpoint behind.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diobound/errors.hpp"

namespace diobound {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fingerprint_of(std::string_view config_text) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config_text)));
    return buf;
}

constexpr int checkpoint_schema_version = 1;

struct Checkpoint {
    std::string fingerprint;
    std::string last_completed_x1; // decimal, absolute value of x1
    std::uint64_t candidates_checked = 0;
    std::uint64_t trivially_satisfied = 0;
    std::uint64_t witnessed_constructive = 0;
    std::uint64_t witnessed_bruteforce = 0;
    std::vector<std::pair<std::string, std::uint64_t>> unresolved; // (csv tuple, budget)
    std::vector<std::string> signatures;                           // encoded, sorted
};

inline void save_checkpoint(const std::string& path, const Checkpoint& c) {
    nlohmann::json j;
    j["schema_version"] = checkpoint_schema_version;
    j["fingerprint"] = c.fingerprint;
    j["last_completed_x1"] = c.last_completed_x1;
    j["candidates_checked"] = c.candidates_checked;
    j["trivially_satisfied"] = c.trivially_satisfied;
    j["witnessed_constructive"] = c.witnessed_constructive;
    j["witnessed_bruteforce"] = c.witnessed_bruteforce;
    nlohmann::json un = nlohmann::json::array();
    for (const auto& [tuple, budget] : c.unresolved)
        un.push_back({{"tuple", tuple}, {"budget", budget}});
    j["unresolved"] = std::move(un);
    j["signatures"] = c.signatures;

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint temp file: " + tmp);
        out << j.dump(2) << '\n';
        out.flush();
        if (!out) throw std::runtime_error("short write to checkpoint temp file: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename checkpoint into place: " + path);
}

inline Checkpoint load_checkpoint(const std::string& path, const std::string& expected_fingerprint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(buf.str());
    if (j.at("schema_version").get<int>() != checkpoint_schema_version)
        throw checkpoint_mismatch("checkpoint schema version " +
                                  j.at("schema_version").dump() + " is not supported");
    Checkpoint c;
    c.fingerprint = j.at("fingerprint").get<std::string>();
    if (c.fingerprint != expected_fingerprint)
        throw checkpoint_mismatch("checkpoint belongs to a different configuration (" +
                                  c.fingerprint + " != " + expected_fingerprint + ")");
    c.last_completed_x1 = j.at("last_completed_x1").get<std::string>();
    c.candidates_checked = j.at("candidates_checked").get<std::uint64_t>();
    c.trivially_satisfied = j.at("trivially_satisfied").get<std::uint64_t>();
    c.witnessed_constructive = j.at("witnessed_constructive").get<std::uint64_t>();
    c.witnessed_bruteforce = j.at("witnessed_bruteforce").get<std::uint64_t>();
    for (const auto& item : j.at("unresolved"))
        c.unresolved.emplace_back(item.at("tuple").get<std::string>(),
                                  item.at("budget").get<std::uint64_t>());
    for (const auto& sig : j.at("signatures")) c.signatures.push_back(sig.get<std::string>());
    return c;
}

} // namespace diobound

#endif
