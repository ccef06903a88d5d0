#pragma once

#include "syncode/errors.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace syncode {

/// Value of one (language, feature) cell. Missing doubles as the
/// undefined-marker: for entailed ternary features it is a live value
/// (the neutralized state), for binary features it means "not mapped".
enum class CellValue : std::uint8_t { Zero = 0, One = 1, Missing = 2 };

/// Maps raw cell tokens to cell values. The standard coding reads "0"/"1"
/// and treats the empty string and "?" as Missing.
struct ValueCoding {
    std::map<std::string, CellValue, std::less<>> tokens;

    static ValueCoding standard();
};

/// Languages x features table of three-state cells. Immutable after
/// construction; row/column order is preserved from the source. Each row is
/// also kept as a pair of bitmasks (defined, value) for fast set operations.
class FeatureMatrix {
public:
    FeatureMatrix(std::vector<std::string> languages,
                  std::vector<std::string> features,
                  std::vector<CellValue> cells);

    const std::vector<std::string>& languages() const { return languages_; }
    const std::vector<std::string>& features() const { return features_; }
    std::size_t language_count() const { return languages_.size(); }
    std::size_t feature_count() const { return features_.size(); }

    CellValue cell(std::size_t language, std::size_t feature) const {
        return cells_[language * features_.size() + feature];
    }

    std::optional<std::size_t> language_index(std::string_view name) const;
    std::optional<std::size_t> feature_index(std::string_view name) const;

    /// Number of 64-bit words per row mask.
    std::size_t mask_words() const { return mask_words_; }
    /// Bit f set iff cell(language, f) != Missing.
    std::span<const std::uint64_t> defined_mask(std::size_t language) const;
    /// Bit f set iff cell(language, f) == One. Zero where undefined.
    std::span<const std::uint64_t> value_mask(std::size_t language) const;

    bool operator==(const FeatureMatrix& other) const;

private:
    std::vector<std::string> languages_;
    std::vector<std::string> features_;
    std::vector<CellValue> cells_;
    std::unordered_map<std::string, std::size_t> language_index_;
    std::unordered_map<std::string, std::size_t> feature_index_;
    std::size_t mask_words_ = 0;
    std::vector<std::uint64_t> defined_;
    std::vector<std::uint64_t> values_;
};

/// One entailment: the target becomes defined exactly when every antecedent
/// holds. Indices refer to the owning schema's feature list.
struct EntailmentRelation {
    std::vector<std::size_t> antecedents;
    std::size_t target = 0;
    double energy = 0.0;

    bool operator==(const EntailmentRelation&) const = default;
};

/// Partition of a feature list into independent binary (B) and entailed
/// ternary (T) features, plus the entailment relations with their energies.
class EntailmentSchema {
public:
    EntailmentSchema() = default;
    EntailmentSchema(std::vector<std::string> features,
                     std::vector<bool> ternary,
                     std::vector<EntailmentRelation> relations);

    /// Schema with every feature in B and no relations.
    static EntailmentSchema all_binary(std::vector<std::string> features);

    const std::vector<std::string>& features() const { return features_; }
    std::size_t feature_count() const { return features_.size(); }
    bool is_ternary(std::size_t feature) const { return ternary_[feature]; }
    bool has_ternary() const { return ternary_count_ > 0; }
    std::size_t ternary_count() const { return ternary_count_; }
    const std::vector<EntailmentRelation>& relations() const { return relations_; }

    std::vector<std::size_t> binary_set() const;
    std::vector<std::size_t> ternary_set() const;
    std::optional<std::size_t> feature_index(std::string_view name) const;

    bool operator==(const EntailmentSchema& other) const;

private:
    std::vector<std::string> features_;
    std::vector<bool> ternary_;
    std::vector<EntailmentRelation> relations_;
    std::unordered_map<std::string, std::size_t> feature_index_;
    std::size_t ternary_count_ = 0;
};

/// Complete weighted graph on a language set. Weights are kept per unordered
/// pair, so lookups are symmetric by construction; all weights are positive.
class InteractionGraph {
public:
    InteractionGraph(std::vector<std::string> languages,
                     std::vector<double> pair_weights);

    /// Complete graph with every edge weight equal to j.
    static InteractionGraph uniform(std::vector<std::string> languages, double j);

    const std::vector<std::string>& languages() const { return languages_; }
    std::size_t language_count() const { return languages_.size(); }

    double weight(std::size_t a, std::size_t b) const;
    double weight(std::string_view a, std::string_view b) const;
    std::optional<std::size_t> language_index(std::string_view name) const;

    bool operator==(const InteractionGraph& other) const;

private:
    std::size_t pair_offset(std::size_t a, std::size_t b) const;

    std::vector<std::string> languages_;
    std::vector<double> weights_; // upper triangle, row-major
    std::unordered_map<std::string, std::size_t> language_index_;
};

FeatureMatrix load_feature_matrix(std::istream& in,
                                  const ValueCoding& coding = ValueCoding::standard());
FeatureMatrix load_feature_matrix(std::string_view text,
                                  const ValueCoding& coding = ValueCoding::standard());
FeatureMatrix load_feature_matrix_file(const std::filesystem::path& path,
                                       const ValueCoding& coding = ValueCoding::standard());
void serialize_feature_matrix(const FeatureMatrix& matrix, std::ostream& out);

EntailmentSchema load_entailment_schema(std::istream& in);
EntailmentSchema load_entailment_schema(std::string_view text);
EntailmentSchema load_entailment_schema_file(const std::filesystem::path& path);
void serialize_entailment_schema(const EntailmentSchema& schema, std::ostream& out);

struct WeightsLoadResult {
    InteractionGraph graph;
    /// Rows naming a language outside the requested list (skipped).
    std::size_t skipped_rows = 0;
    std::vector<std::string> warnings;
};

WeightsLoadResult load_interaction_weights(std::istream& in,
                                           const std::vector<std::string>& languages,
                                           std::optional<double> default_weight = std::nullopt);
WeightsLoadResult load_interaction_weights(std::string_view text,
                                           const std::vector<std::string>& languages,
                                           std::optional<double> default_weight = std::nullopt);
WeightsLoadResult load_interaction_weights_file(const std::filesystem::path& path,
                                                const std::vector<std::string>& languages,
                                                std::optional<double> default_weight = std::nullopt);
void serialize_interaction_weights(const InteractionGraph& graph, std::ostream& out);

/// Features that are defined (non-Missing) for every language in the subset,
/// in matrix column order. Antitone in the subset: growing the subset can
/// only shrink the result.
std::vector<std::size_t> fully_mapped_features(const FeatureMatrix& matrix,
                                               std::span<const std::size_t> languages);
std::vector<std::size_t> fully_mapped_features(const FeatureMatrix& matrix,
                                               std::span<const std::string> languages);

} // namespace syncode
