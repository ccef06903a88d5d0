#pragma once

#include "syncode/corpus.hpp"
#include "syncode/rng.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

namespace testutil {

inline std::filesystem::path repo_dir() {
    return std::filesystem::path(SYNCODE_REPO_DIR);
}

inline std::filesystem::path config_path(const std::string& name) {
    return repo_dir() / "configs" / name;
}

/// Fresh scratch directory under the system temp dir, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("syncode_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::filesystem::path file(const std::string& name) const { return path / name; }
};

inline std::string pad3(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%03zu", i);
    return buf;
}

/// Deterministic corpus: each cell is Missing with probability
/// missing_fraction, else a fair coin over {0,1}.
inline syncode::FeatureMatrix synthetic_matrix(std::size_t languages, std::size_t features,
                                               double missing_fraction,
                                               std::uint64_t seed) {
    std::vector<std::string> lang_names;
    std::vector<std::string> feat_names;
    for (std::size_t l = 0; l < languages; ++l) lang_names.push_back("L" + pad3(l));
    for (std::size_t f = 0; f < features; ++f) feat_names.push_back("f" + pad3(f));

    syncode::Rng rng(seed);
    std::vector<syncode::CellValue> cells;
    cells.reserve(languages * features);
    for (std::size_t i = 0; i < languages * features; ++i) {
        if (rng.uniform01() < missing_fraction) {
            cells.push_back(syncode::CellValue::Missing);
        } else {
            cells.push_back(rng.uniform_index(2) ? syncode::CellValue::One
                                                 : syncode::CellValue::Zero);
        }
    }
    return syncode::FeatureMatrix(std::move(lang_names), std::move(feat_names),
                                  std::move(cells));
}

} // namespace testutil
