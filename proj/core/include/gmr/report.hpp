#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gmr/abgroup.hpp"
#include "gmr/theorems.hpp"

namespace gmr {

// Insertion-ordered JSON keeps report field order stable across runs.
using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool full_tables = false;        // include large function tables verbatim
    std::size_t elide_above = 32;    // entry count beyond which tables are elided
};

std::string fnv1a64_hex(const std::string& data);

/// {"size": n, "hash": "...", "entries": [...]?}; entries appear when the
/// table is small or full_tables is set. The hash is always present.
Json json_table(const std::vector<Elem>& table, const ReportOptions& opts);

/// Element as its coordinate vector in the given carrier.
Json json_coords(const AbGroup& g, Elem a);

Json json_validation(const ValidationReport& rep);

Json json_verdict(const Verdict& v);

/// Top-level envelope: tool, version, schema, command echo.
Json report_envelope(const std::string& command, const Json& args);

/// Deterministic structured rendering (no timings).
std::string render_structured(const Json& report);

/// Human-readable rendering of the same content.
std::string render_text(const Json& report);

}  // namespace gmr
