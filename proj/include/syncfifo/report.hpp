#pragma once

#include <syncfifo/sim_kernel.hpp>

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

namespace syncfifo {

/// Stable JSON form. Keys are emitted in sorted order and no host or clock
/// data is included, so equal runs serialize to equal bytes.
inline nlohmann::json to_json(const RunReport &r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto &m : r.mismatches)
        mismatches.push_back({{"cycle", m.cycle},
                              {"category", std::string(tb::to_string(m.category))},
                              {"expected", m.expected},
                              {"actual", m.actual}});
    nlohmann::json bins = nlohmann::json::object();
    for (std::size_t i = 0; i < tb::kCoverBinCount; ++i)
        bins[std::string(tb::kCoverBinNames[i])] = r.coverage.bins[i];

    return {
        {"test", r.test},
        {"seed", r.seed},
        {"cycles", r.cycles},
        {"writes_accepted", r.writes_accepted},
        {"reads_accepted", r.reads_accepted},
        {"writes_rejected", r.writes_rejected},
        {"reads_rejected", r.reads_rejected},
        {"mismatches", mismatches},
        {"coverage", {{"bins", bins}, {"percent", r.coverage.percent()}}},
        {"truncated", r.truncated},
        {"notes", r.notes},
        {"pass", r.pass},
    };
}

inline std::string to_json_string(const RunReport &r) { return to_json(r).dump(2) + "\n"; }

inline std::string to_text(const RunReport &r) {
    std::ostringstream os;
    char seed[32];
    std::snprintf(seed, sizeof seed, "0x%016llx", static_cast<unsigned long long>(r.seed));
    os << "test:     " << r.test << "\n"
       << "seed:     " << seed << "\n"
       << "cycles:   " << r.cycles << "\n"
       << "writes:   " << r.writes_accepted << " accepted, " << r.writes_rejected << " rejected\n"
       << "reads:    " << r.reads_accepted << " accepted, " << r.reads_rejected << " rejected\n"
       << "coverage: " << r.coverage.percent() << "%\n";
    for (std::size_t i = 0; i < tb::kCoverBinCount; ++i)
        os << "  " << tb::kCoverBinNames[i] << ": " << r.coverage.bins[i] << "\n";
    os << "mismatches: " << r.mismatches.size() << "\n";
    for (const auto &m : r.mismatches)
        os << "  cycle " << m.cycle << " " << tb::to_string(m.category) << " expected=" << m.expected
           << " actual=" << m.actual << "\n";
    for (const auto &n : r.notes)
        os << "note: " << n << "\n";
    os << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace syncfifo
