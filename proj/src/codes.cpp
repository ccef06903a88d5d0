#include "syncode/codes.hpp"

#include <cmath>

namespace syncode {

namespace {

bool valid_symbol(int q, Symbol s) {
    if (q == 2) return s == 0 || s == 1;
    return s == -1 || s == 0 || s == 1;
}

} // namespace

Code make_code(int q, std::vector<Word> words, std::vector<std::string> labels) {
    if (q != 2 && q != 3) throw Error("alphabet size must be 2 or 3");
    if (words.empty()) throw EmptyInput("a code needs at least one word");
    if (words.size() != labels.size()) {
        throw LengthMismatch("words and labels must have equal length");
    }
    const std::size_t n = words.front().size();
    if (n == 0) throw LengthMismatch("code words must be nonempty");
    for (const Word& w : words) {
        if (w.size() != n) {
            throw LengthMismatch("all code words must have length " + std::to_string(n));
        }
        for (Symbol s : w) {
            if (!valid_symbol(q, s)) {
                throw BadSymbol("symbol " + std::to_string(int(s)) +
                                " is not a valid letter for q=" + std::to_string(q));
            }
        }
    }
    return Code{q, n, std::move(words), std::move(labels)};
}

Code build_code(const FeatureMatrix& matrix,
                std::span<const std::string> languages,
                std::span<const std::string> features,
                const EntailmentSchema* schema) {
    std::vector<std::size_t> lang_idx;
    lang_idx.reserve(languages.size());
    for (const auto& name : languages) {
        auto i = matrix.language_index(name);
        if (!i) throw UnknownLanguage("unknown language: " + name);
        lang_idx.push_back(*i);
    }

    struct Column {
        std::size_t feature;
        bool ternary;
    };
    std::vector<Column> columns;
    columns.reserve(features.size());
    for (const auto& name : features) {
        auto f = matrix.feature_index(name);
        if (!f) throw UnknownFeature("unknown feature: " + name);
        bool ternary = false;
        if (schema) {
            if (auto sf = schema->feature_index(name)) ternary = schema->is_ternary(*sf);
        }
        columns.push_back({*f, ternary});
    }
    if (schema) {
        for (const auto& name : schema->features()) {
            bool listed = false;
            for (const auto& given : features) {
                if (given == name) { listed = true; break; }
            }
            if (!listed) {
                throw UnknownFeature("schema feature " + name +
                                     " is not among the listed features");
            }
        }
    }

    const int q = schema ? 3 : 2;
    std::vector<Word> words;
    words.reserve(lang_idx.size());
    for (std::size_t li = 0; li < lang_idx.size(); ++li) {
        Word w;
        w.reserve(columns.size());
        for (const Column& col : columns) {
            const CellValue v = matrix.cell(lang_idx[li], col.feature);
            if (!schema) {
                if (v == CellValue::Missing) {
                    throw NotFullyMapped("feature " + matrix.features()[col.feature] +
                                         " is not mapped for " + languages[li]);
                }
                w.push_back(v == CellValue::One ? 1 : 0);
            } else if (col.ternary) {
                // defined values become spins, the undefined-marker becomes 0
                w.push_back(v == CellValue::Missing ? 0 : (v == CellValue::One ? 1 : -1));
            } else {
                if (v == CellValue::Missing) {
                    throw NotFullyMapped("binary feature " + matrix.features()[col.feature] +
                                         " is not mapped for " + languages[li]);
                }
                w.push_back(v == CellValue::One ? 1 : -1);
            }
        }
        words.push_back(std::move(w));
    }
    return make_code(q, std::move(words),
                     std::vector<std::string>(languages.begin(), languages.end()));
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("word lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::size_t min_distance(const Code& code) {
    if (code.words.size() == 1) return code.n;
    std::size_t best = code.n;
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            const std::size_t d = hamming_distance(code.words[i], code.words[j]);
            if (d < best) {
                best = d;
                if (best == 0) return 0;
            }
        }
    }
    return best;
}

CodeParams code_parameters(const Code& code) {
    CodeParams p;
    p.n = code.n;
    p.size = code.words.size();
    // log2 is exact on powers of two, which keeps k = 1 exact for pair codes
    p.k = code.q == 2 ? std::log2(static_cast<double>(p.size))
                      : std::log(static_cast<double>(p.size)) / std::log(3.0);
    p.d = min_distance(code);
    p.delta = static_cast<double>(p.d) / static_cast<double>(p.n);
    p.rate = p.k / static_cast<double>(p.n);
    return p;
}

} // namespace syncode
