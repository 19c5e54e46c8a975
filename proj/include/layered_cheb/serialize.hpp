#pragma once

// Machine-readable output. Integers are written as decimal strings so that
// consumers with 53-bit floats lose nothing; every JSON document carries
// kSchemaVersion.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "layered_cheb/checker.hpp"
#include "layered_cheb/integer.hpp"
#include "layered_cheb/series.hpp"

namespace layered_cheb {

inline constexpr const char* kSchemaVersion = "layered-cheb/1";

nlohmann::json to_json(const std::vector<BigInt>& values);
nlohmann::json to_json(const IntPolynomial& poly);
nlohmann::json to_json(const VerificationReport& report);

/// "n,f_n" header followed by one row per entry, LF line endings.
std::string series_csv(const std::vector<BigInt>& values);

/// One summary line, then one indented line per failure.
std::string to_text(const VerificationReport& report);

}  // namespace layered_cheb
