#pragma once

#include "qsv/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qsv {

inline constexpr const char* kVersion = "0.1.0";

struct RunInfo {
    std::uint64_t seed = 1;
    long order = 40;
    long n_max = 6;
    std::string timestamp;
    std::string version = kVersion;
    bool operator==(const RunInfo&) const = default;
};

// UTC, second resolution.
std::string utc_timestamp();

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

std::string emit_json(const RunInfo& run, const std::vector<Report>& reports);
std::string emit_text(const std::vector<Report>& reports);
std::pair<RunInfo, std::vector<Report>> parse_report_document(const std::string& text);

// Empty path or "-" writes to standard output.
void write_output(const std::string& content, const std::string& path);

}  // namespace qsv
