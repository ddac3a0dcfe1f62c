#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hecke/config.hpp"

namespace hecke {

// In execution order.
const std::vector<std::string>& suite_names();

std::vector<CheckReport> run_suite(const RunConfig& cfg);

// Canonical JSON {version, config, reports}; keys sorted. elapsed_ms is only
// written when timings is set, so default output is byte-stable.
std::string render_report(const RunConfig& cfg, const std::vector<CheckReport>& reports, bool timings = false);
// Throws IoError when the file cannot be written.
void emit_report(const RunConfig& cfg, const std::vector<CheckReport>& reports, const std::filesystem::path& path,
                 bool timings = false);

}  // namespace hecke
