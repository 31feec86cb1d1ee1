#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asep/dynamics.hpp"
#include "asep/experiments.hpp"

namespace asep {

// Round-trip formatting so emitted tables are bit-stable inputs.
std::string format_double(double v);

std::string tv_curve_csv(const std::vector<TvEstimate>& rows);
std::string profile_csv(const std::vector<ProfilePoint>& rows);
std::string event_b_csv(const std::vector<EventBEstimate>& rows);
std::string identity_csv(const IdentityMcEstimate& row);
std::string hitting_csv(const std::vector<HittingSample>& rows);

// Manifest values arrive as preformatted JSON fragments so numbers keep
// the same round-trip formatting as the tables.
std::string run_manifest_json(
    const std::string& subcommand,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    std::uint64_t seed, const std::string& version);

std::string json_quote(const std::string& s);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace asep
