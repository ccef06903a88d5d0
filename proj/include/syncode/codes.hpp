#pragma once

#include "syncode/corpus.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace syncode {

/// One letter of a code word. Binary codes use {0,1}; ternary codes use
/// {-1,0,+1}, where 0 marks an undefined entailed value.
using Symbol = std::int8_t;
using Word = std::vector<Symbol>;

/// A q-ary block code as an ordered multiset of equal-length words, one per
/// language. Duplicate words are kept: the worked corpora produce them and
/// they force minimum distance 0.
struct Code {
    int q = 2;
    std::size_t n = 0;
    std::vector<Word> words;
    std::vector<std::string> labels;
};

/// Validates alphabet, length and label invariants; returns the code.
Code make_code(int q, std::vector<Word> words, std::vector<std::string> labels);

/// Derived parameters of a code. For a singleton code (N=1) the minimum
/// distance is defined as n, giving (delta, rate) = (1, 0).
struct CodeParams {
    std::size_t n = 0;     ///< word length
    std::size_t size = 0;  ///< N, multiset count
    double k = 0.0;        ///< absolute rate log_q(N)
    std::size_t d = 0;     ///< minimum pairwise Hamming distance
    double delta = 0.0;    ///< d/n
    double rate = 0.0;     ///< k/n
};

/// Builds the code of a language subset over the given features.
///
/// Without a schema the result is binary: symbols are the raw cell values
/// and every cell must be defined. With a schema the result is ternary:
/// B-features map {0,1} to spins {-1,+1} via s = 2x-1 (and must be defined),
/// T-features map {0,1,undefined} to {-1,+1,0}. Features absent from the
/// schema are treated as binary.
Code build_code(const FeatureMatrix& matrix,
                std::span<const std::string> languages,
                std::span<const std::string> features,
                const EntailmentSchema* schema = nullptr);

/// Number of coordinates where the words differ. For binary words this
/// equals the sum of |x_i - y_i|.
std::size_t hamming_distance(const Word& a, const Word& b);

/// Minimum pairwise Hamming distance over all unordered pairs; 0 whenever a
/// duplicate word exists, n for a singleton code.
std::size_t min_distance(const Code& code);

CodeParams code_parameters(const Code& code);

} // namespace syncode
