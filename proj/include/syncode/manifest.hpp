#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syncode {

/// Reproducibility record written next to every command output. Two runs
/// with identical manifests produce identical outputs.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::map<std::string, std::string> input_digests; ///< path -> fnv1a64 hex
    std::optional<std::uint64_t> seed;
    std::string tool_version;
    std::vector<std::string> outputs;

    void add_input(const std::filesystem::path& path);
    nlohmann::json to_json() const;
};

/// Writes <output>.manifest.json next to the named primary output.
void write_manifest(const RunManifest& manifest, const std::filesystem::path& primary_output);

} // namespace syncode
