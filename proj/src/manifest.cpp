#include "syncode/manifest.hpp"

#include "syncode/text.hpp"

namespace syncode {

void RunManifest::add_input(const std::filesystem::path& path) {
    input_digests[path.string()] = "fnv1a64:" + fnv1a64_hex(read_file(path));
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["inputs"] = input_digests;
    if (seed) {
        doc["seed"] = *seed;
    } else {
        doc["seed"] = nullptr;
    }
    doc["tool_version"] = tool_version;
    doc["outputs"] = outputs;
    return doc;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& primary_output) {
    std::filesystem::path path = primary_output;
    path += ".manifest.json";
    write_file(path, manifest.to_json().dump(2) + "\n");
}

} // namespace syncode
