#pragma once

#include <optional>
#include <string>

#include "fibroot/verifier.hpp"

namespace fibroot {

enum class OutputFormat { json, csv, human };

std::optional<OutputFormat> format_from_name(const std::string& name);

// JSON: the versioned schema {schema, config, results, summary,
// runtime_seconds}. CSV: the results table only (header
// k,claim,status,margin,witness,bits_used), runtime-free and byte-stable
// across equal configs. Human: an aligned table plus the summary.
std::string serialize_report(const Report& report, OutputFormat format);

// Inverse of serialize_report(json). Throws std::runtime_error on
// malformed or wrong-schema input.
Report parse_report_json(const std::string& text);

// One row per root: k, index, sector_h, kind, mid_re, mid_im, radius,
// modulus_lo, modulus_hi, arg_lo, arg_hi. Numeric fields are decimal
// strings carrying ceil(bits * 0.3010) + 2 digits so downstream tools get
// the full working precision.
std::string serialize_roots(const RootSet& rs, OutputFormat format);

}  // namespace fibroot
