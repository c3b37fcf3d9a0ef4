#pragma once

#include <string>

#include <json.hpp>

#include "leonard/characterize.hpp"
#include "leonard/system.hpp"

namespace leonard {

/// System file schema: field descriptor, d, and the scalar-string lists b, c,
/// theta_star in the parse_scalar grammar.
nlohmann::ordered_json system_to_json(const BipartiteSystem& sys);
BipartiteSystem system_from_json(const nlohmann::json& j);

BipartiteSystem read_system_file(const std::string& path);
void write_system_file(const BipartiteSystem& sys, const std::string& path);

struct ReportOptions {
    bool identities = false;
    bool oracle = false;
};

/// Builds the full certification report. Deterministic: identical input and
/// options produce an identical document. The embedded exit_status follows the
/// check command contract (0: some certified ordering, 1: none).
nlohmann::ordered_json build_report(const BipartiteSystem& sys, const ReportOptions& opts);

} // namespace leonard
