#pragma once

#include <filesystem>
#include <string>

#include "bga/ga_engine.hpp"

namespace bga {

// Run records persist as JSON with sorted keys and truth tables in hex, so a
// given (config, seed) always produces the same bytes.
std::string run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& text);

void write_run_record(const std::filesystem::path& path, const RunRecord& record);
RunRecord read_run_record(const std::filesystem::path& path);

}  // namespace bga
