#pragma once

#include <nlohmann/json.hpp>

#include "antisym/encoder.hpp"
#include "antisym/report.hpp"

namespace antisym {

/// Array of coordinates; each coordinate an array of
/// {"zeta", "parity", "k_eta", "k_xi"} with little-endian mask strings.
nlohmann::json to_json(const CodePoint& point);
CodePoint code_point_from_json(const nlohmann::json& j);

/// {campaign, seed, pairs_checked, violations, branch_histogram,
///  elapsed_ms, pass} plus counts and exceptional findings.
nlohmann::json to_json(const VerificationReport& report);

}  // namespace antisym
