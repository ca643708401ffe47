// JSON model files:
//   {"atoms": [...], "modalities": [...], "worlds": [...],
//    "valuation": {"w": ["p", ...], ...},
//    "relations": {"i": [["w", "v"], ...], ...},
//    "preference": [["a", "b"], ...]}
// A preference entry ["a", "b"] asserts that a is strictly preferred to b.
// Atoms missing from a world's valuation are false there.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dmt/model.hpp"

namespace dmt {

RawModel parse_model_json(std::string_view text);
PreferentialModel load_model(const std::filesystem::path& path);

std::string model_to_json(const PreferentialModel& m);
void save_model(const PreferentialModel& m, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace dmt
