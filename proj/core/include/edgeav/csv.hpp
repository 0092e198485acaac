#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edgeav {

// Minimal CSV helpers for the toolkit's own file formats. None of our formats
// quote or embed commas, so a plain split is sufficient.
std::vector<std::string_view> split_csv(std::string_view line);

bool parse_i64(std::string_view s, std::int64_t& out);
bool parse_u64(std::string_view s, std::uint64_t& out);
bool parse_f64(std::string_view s, double& out);

std::string_view trim(std::string_view s);

// Stable numeric formatting for reproducible output files.
std::string fmt_double(double v);         // shortest round-trip (%.17g trimmed via %g logic)
std::string fmt_fixed(double v, int dp);  // fixed decimal places

}  // namespace edgeav
