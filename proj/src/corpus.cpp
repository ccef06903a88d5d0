#include "syncode/corpus.hpp"

#include "syncode/text.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace syncode {

using nlohmann::json;

ValueCoding ValueCoding::standard() {
    ValueCoding coding;
    coding.tokens["0"] = CellValue::Zero;
    coding.tokens["1"] = CellValue::One;
    coding.tokens[""] = CellValue::Missing;
    coding.tokens["?"] = CellValue::Missing;
    return coding;
}

namespace {

void check_identifiers(const std::vector<std::string>& names, const char* what,
                       std::unordered_map<std::string, std::size_t>& index) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) {
            throw BadIdentifier(std::string("empty ") + what + " identifier at position " +
                                std::to_string(i + 1));
        }
        auto [it, inserted] = index.emplace(names[i], i);
        if (!inserted) {
            throw DuplicateIdentifier(std::string("duplicate ") + what + " identifier: " +
                                      names[i]);
        }
    }
}

double parse_double(std::string_view token, const std::string& context) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw BadWeight("cannot parse number '" + std::string(token) + "' " + context);
    }
    return value;
}

} // namespace

FeatureMatrix::FeatureMatrix(std::vector<std::string> languages,
                             std::vector<std::string> features,
                             std::vector<CellValue> cells)
    : languages_(std::move(languages)),
      features_(std::move(features)),
      cells_(std::move(cells)) {
    if (languages_.empty() || features_.empty()) {
        throw EmptyCorpus("a feature matrix needs at least one language and one feature");
    }
    if (cells_.size() != languages_.size() * features_.size()) {
        throw Error("cell count does not match matrix dimensions");
    }
    check_identifiers(languages_, "language", language_index_);
    check_identifiers(features_, "feature", feature_index_);

    mask_words_ = (features_.size() + 63) / 64;
    defined_.assign(languages_.size() * mask_words_, 0);
    values_.assign(languages_.size() * mask_words_, 0);
    for (std::size_t l = 0; l < languages_.size(); ++l) {
        for (std::size_t f = 0; f < features_.size(); ++f) {
            const CellValue v = cell(l, f);
            const std::size_t w = l * mask_words_ + f / 64;
            const std::uint64_t bit = 1ull << (f % 64);
            if (v != CellValue::Missing) defined_[w] |= bit;
            if (v == CellValue::One) values_[w] |= bit;
        }
    }
}

std::optional<std::size_t> FeatureMatrix::language_index(std::string_view name) const {
    auto it = language_index_.find(std::string(name));
    if (it == language_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FeatureMatrix::feature_index(std::string_view name) const {
    auto it = feature_index_.find(std::string(name));
    if (it == feature_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::uint64_t> FeatureMatrix::defined_mask(std::size_t language) const {
    return {defined_.data() + language * mask_words_, mask_words_};
}

std::span<const std::uint64_t> FeatureMatrix::value_mask(std::size_t language) const {
    return {values_.data() + language * mask_words_, mask_words_};
}

bool FeatureMatrix::operator==(const FeatureMatrix& other) const {
    return languages_ == other.languages_ && features_ == other.features_ &&
           cells_ == other.cells_;
}

FeatureMatrix load_feature_matrix(std::string_view text, const ValueCoding& coding) {
    const auto rows = parse_csv(text);
    if (rows.empty()) throw EmptyCorpus("feature matrix file is empty");

    const CsvRow& header = rows.front();
    if (header.size() < 2) throw EmptyCorpus("feature matrix has no feature columns");
    std::vector<std::string> features(header.begin() + 1, header.end());

    if (rows.size() < 2) throw EmptyCorpus("feature matrix has no language rows");
    std::vector<std::string> languages;
    std::vector<CellValue> cells;
    languages.reserve(rows.size() - 1);
    cells.reserve((rows.size() - 1) * features.size());

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        if (row.size() != features.size() + 1) {
            throw BadCellToken("row " + std::to_string(r + 1) + " has " +
                               std::to_string(row.size()) + " fields, expected " +
                               std::to_string(features.size() + 1));
        }
        languages.push_back(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            auto it = coding.tokens.find(row[c]);
            if (it == coding.tokens.end()) {
                throw BadCellToken("unmappable cell token '" + row[c] + "' at row " +
                                   std::to_string(r + 1) + ", column " + std::to_string(c + 1));
            }
            cells.push_back(it->second);
        }
    }
    return FeatureMatrix(std::move(languages), std::move(features), std::move(cells));
}

FeatureMatrix load_feature_matrix(std::istream& in, const ValueCoding& coding) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_feature_matrix(std::string_view{buf.str()}, coding);
}

FeatureMatrix load_feature_matrix_file(const std::filesystem::path& path,
                                       const ValueCoding& coding) {
    return load_feature_matrix(std::string_view{read_file(path)}, coding);
}

void serialize_feature_matrix(const FeatureMatrix& matrix, std::ostream& out) {
    CsvRow header;
    header.push_back("language");
    for (const auto& f : matrix.features()) header.push_back(f);
    out << csv_line(header) << '\n';
    for (std::size_t l = 0; l < matrix.language_count(); ++l) {
        CsvRow row;
        row.push_back(matrix.languages()[l]);
        for (std::size_t f = 0; f < matrix.feature_count(); ++f) {
            switch (matrix.cell(l, f)) {
                case CellValue::Zero: row.push_back("0"); break;
                case CellValue::One: row.push_back("1"); break;
                case CellValue::Missing: row.push_back(""); break;
            }
        }
        out << csv_line(row) << '\n';
    }
}

EntailmentSchema::EntailmentSchema(std::vector<std::string> features,
                                   std::vector<bool> ternary,
                                   std::vector<EntailmentRelation> relations)
    : features_(std::move(features)),
      ternary_(std::move(ternary)),
      relations_(std::move(relations)) {
    if (ternary_.size() != features_.size()) {
        throw Error("schema class flags do not match feature count");
    }
    check_identifiers(features_, "feature", feature_index_);
    ternary_count_ = static_cast<std::size_t>(
        std::count(ternary_.begin(), ternary_.end(), true));

    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> seen;
    for (const auto& rel : relations_) {
        if (rel.antecedents.empty()) {
            throw UnknownFeature("relation has no antecedents");
        }
        if (rel.target >= features_.size() || !ternary_[rel.target]) {
            throw MisclassifiedTarget("relation target must be a ternary feature");
        }
        for (std::size_t i = 0; i < rel.antecedents.size(); ++i) {
            const std::size_t a = rel.antecedents[i];
            if (a >= features_.size()) throw UnknownFeature("relation antecedent out of range");
            if (ternary_[a]) {
                throw MisclassifiedTarget("relation antecedent " + features_[a] +
                                          " must be a binary feature");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (rel.antecedents[j] == a) {
                    throw DuplicateIdentifier("feature " + features_[a] +
                                              " listed twice as an antecedent");
                }
            }
        }
        if (rel.energy < 0.0) {
            throw BadEnergy("negative entailment energy for target " + features_[rel.target]);
        }
        auto key = std::make_pair(rel.antecedents, rel.target);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw DuplicateIdentifier("duplicate relation for target " + features_[rel.target]);
        }
        seen.push_back(std::move(key));
    }
}

EntailmentSchema EntailmentSchema::all_binary(std::vector<std::string> features) {
    std::vector<bool> ternary(features.size(), false);
    return EntailmentSchema(std::move(features), std::move(ternary), {});
}

std::vector<std::size_t> EntailmentSchema::binary_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ternary_.size(); ++i) {
        if (!ternary_[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> EntailmentSchema::ternary_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ternary_.size(); ++i) {
        if (ternary_[i]) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> EntailmentSchema::feature_index(std::string_view name) const {
    auto it = feature_index_.find(std::string(name));
    if (it == feature_index_.end()) return std::nullopt;
    return it->second;
}

bool EntailmentSchema::operator==(const EntailmentSchema& other) const {
    return features_ == other.features_ && ternary_ == other.ternary_ &&
           relations_ == other.relations_;
}

EntailmentSchema load_entailment_schema(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("cannot parse schema JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("schema JSON must be an object");

    std::vector<std::string> features;
    std::vector<bool> ternary;
    for (const auto& name : doc.value("binary", json::array())) {
        features.push_back(name.get<std::string>());
        ternary.push_back(false);
    }
    for (const auto& name : doc.value("ternary", json::array())) {
        features.push_back(name.get<std::string>());
        ternary.push_back(true);
    }

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < features.size(); ++i) index.emplace(features[i], i);

    auto lookup = [&](const std::string& name) -> std::size_t {
        auto it = index.find(name);
        if (it == index.end()) {
            throw UnknownFeature("relation names unknown feature: " + name);
        }
        return it->second;
    };

    std::vector<EntailmentRelation> relations;
    for (const auto& rel : doc.value("relations", json::array())) {
        EntailmentRelation r;
        for (const auto& a : rel.at("antecedents")) {
            r.antecedents.push_back(lookup(a.get<std::string>()));
        }
        r.target = lookup(rel.at("target").get<std::string>());
        if (!rel.contains("energy") || !rel["energy"].is_number()) {
            throw BadEnergy("relation is missing a numeric energy");
        }
        r.energy = rel["energy"].get<double>();
        if (r.energy < 0.0) {
            throw BadEnergy("negative entailment energy for target " +
                            rel.at("target").get<std::string>());
        }
        relations.push_back(std::move(r));
    }
    return EntailmentSchema(std::move(features), std::move(ternary), std::move(relations));
}

EntailmentSchema load_entailment_schema(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_entailment_schema(std::string_view{buf.str()});
}

EntailmentSchema load_entailment_schema_file(const std::filesystem::path& path) {
    return load_entailment_schema(std::string_view{read_file(path)});
}

void serialize_entailment_schema(const EntailmentSchema& schema, std::ostream& out) {
    json doc;
    doc["binary"] = json::array();
    doc["ternary"] = json::array();
    for (std::size_t i = 0; i < schema.feature_count(); ++i) {
        (schema.is_ternary(i) ? doc["ternary"] : doc["binary"]).push_back(schema.features()[i]);
    }
    doc["relations"] = json::array();
    for (const auto& rel : schema.relations()) {
        json r;
        r["antecedents"] = json::array();
        for (std::size_t a : rel.antecedents) r["antecedents"].push_back(schema.features()[a]);
        r["target"] = schema.features()[rel.target];
        r["energy"] = rel.energy;
        doc["relations"].push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
}

InteractionGraph::InteractionGraph(std::vector<std::string> languages,
                                   std::vector<double> pair_weights)
    : languages_(std::move(languages)), weights_(std::move(pair_weights)) {
    check_identifiers(languages_, "language", language_index_);
    const std::size_t n = languages_.size();
    if (weights_.size() != n * (n - 1) / 2) {
        throw IncompleteGraph("expected " + std::to_string(n * (n - 1) / 2) +
                              " pair weights, got " + std::to_string(weights_.size()));
    }
    for (double w : weights_) {
        if (!(w > 0.0)) throw BadWeight("interaction weights must be positive");
    }
}

InteractionGraph InteractionGraph::uniform(std::vector<std::string> languages, double j) {
    const std::size_t n = languages.size();
    return InteractionGraph(std::move(languages), std::vector<double>(n * (n - 1) / 2, j));
}

std::size_t InteractionGraph::pair_offset(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    // offset of unordered pair (a,b), a < b, in the row-major upper triangle
    const std::size_t n = languages_.size();
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

double InteractionGraph::weight(std::size_t a, std::size_t b) const {
    if (a == b) throw Error("no self-interaction weight");
    return weights_[pair_offset(a, b)];
}

double InteractionGraph::weight(std::string_view a, std::string_view b) const {
    auto ia = language_index(a);
    auto ib = language_index(b);
    if (!ia || !ib) {
        throw UnknownLanguage("unknown language in weight lookup: " +
                              std::string(!ia ? a : b));
    }
    return weight(*ia, *ib);
}

std::optional<std::size_t> InteractionGraph::language_index(std::string_view name) const {
    auto it = language_index_.find(std::string(name));
    if (it == language_index_.end()) return std::nullopt;
    return it->second;
}

bool InteractionGraph::operator==(const InteractionGraph& other) const {
    return languages_ == other.languages_ && weights_ == other.weights_;
}

WeightsLoadResult load_interaction_weights(std::string_view text,
                                           const std::vector<std::string>& languages,
                                           std::optional<double> default_weight) {
    if (default_weight && !(*default_weight > 0.0)) {
        throw BadWeight("default weight must be positive");
    }
    std::unordered_map<std::string, std::size_t> index;
    check_identifiers(languages, "language", index);

    const std::size_t n = languages.size();
    std::vector<double> weights(n * (n - 1) / 2, 0.0);
    std::vector<bool> present(weights.size(), false);
    auto offset = [n](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    };

    std::size_t skipped = 0;
    std::vector<std::string> warnings;
    const auto rows = parse_csv(text);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const CsvRow& row = rows[r];
        if (row.size() != 3) {
            throw BadWeight("weights row " + std::to_string(r + 1) +
                            " must have exactly 3 fields");
        }
        auto ia = index.find(row[0]);
        auto ib = index.find(row[1]);
        if (ia == index.end() || ib == index.end()) {
            ++skipped;
            warnings.push_back("row " + std::to_string(r + 1) +
                               " names unlisted language '" +
                               (ia == index.end() ? row[0] : row[1]) + "', skipped");
            continue;
        }
        if (ia->second == ib->second) {
            ++skipped;
            warnings.push_back("row " + std::to_string(r + 1) + " is a self-pair, skipped");
            continue;
        }
        const double w = parse_double(row[2], "at weights row " + std::to_string(r + 1));
        if (!(w > 0.0)) {
            throw BadWeight("nonpositive weight " + row[2] + " at row " + std::to_string(r + 1));
        }
        const std::size_t o = offset(ia->second, ib->second);
        weights[o] = w; // later rows win
        present[o] = true;
    }

    std::vector<std::string> missing;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (present[offset(a, b)]) continue;
            if (default_weight) {
                weights[offset(a, b)] = *default_weight;
            } else {
                missing.push_back(languages[a] + "/" + languages[b]);
            }
        }
    }
    if (!missing.empty()) {
        std::string msg = "weights table is missing " + std::to_string(missing.size()) +
                          " pair(s):";
        for (std::size_t i = 0; i < missing.size() && i < 8; ++i) msg += " " + missing[i];
        if (missing.size() > 8) msg += " ...";
        throw IncompleteGraph(msg);
    }
    return WeightsLoadResult{InteractionGraph(languages, std::move(weights)), skipped,
                             std::move(warnings)};
}

WeightsLoadResult load_interaction_weights(std::istream& in,
                                           const std::vector<std::string>& languages,
                                           std::optional<double> default_weight) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_interaction_weights(std::string_view{buf.str()}, languages, default_weight);
}

WeightsLoadResult load_interaction_weights_file(const std::filesystem::path& path,
                                                const std::vector<std::string>& languages,
                                                std::optional<double> default_weight) {
    return load_interaction_weights(std::string_view{read_file(path)}, languages,
                                    default_weight);
}

void serialize_interaction_weights(const InteractionGraph& graph, std::ostream& out) {
    const auto& langs = graph.languages();
    for (std::size_t a = 0; a < langs.size(); ++a) {
        for (std::size_t b = a + 1; b < langs.size(); ++b) {
            out << csv_line({langs[a], langs[b], format_double(graph.weight(a, b))}) << '\n';
        }
    }
}

std::vector<std::size_t> fully_mapped_features(const FeatureMatrix& matrix,
                                               std::span<const std::size_t> languages) {
    if (languages.empty()) throw EmptyInput("language subset must be nonempty");
    std::vector<std::uint64_t> mask(matrix.mask_words(), ~0ull);
    for (std::size_t l : languages) {
        if (l >= matrix.language_count()) {
            throw UnknownLanguage("language index " + std::to_string(l) + " out of range");
        }
        const auto def = matrix.defined_mask(l);
        for (std::size_t w = 0; w < mask.size(); ++w) mask[w] &= def[w];
    }
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < matrix.feature_count(); ++f) {
        if (mask[f / 64] >> (f % 64) & 1) out.push_back(f);
    }
    return out;
}

std::vector<std::size_t> fully_mapped_features(const FeatureMatrix& matrix,
                                               std::span<const std::string> languages) {
    std::vector<std::size_t> idx;
    idx.reserve(languages.size());
    for (const auto& name : languages) {
        auto i = matrix.language_index(name);
        if (!i) throw UnknownLanguage("unknown language: " + name);
        idx.push_back(*i);
    }
    return fully_mapped_features(matrix, idx);
}

} // namespace syncode
