#pragma once

#include "syncode/bounds.hpp"
#include "syncode/codes.hpp"
#include "syncode/corpus.hpp"
#include "syncode/rng.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace syncode {

/// Code point of one language tuple, over the features fully mapped for it.
struct SurveyRecord {
    std::vector<std::string> languages;
    std::size_t n = 0;
    std::size_t d = 0;
    double k = 0.0;
    double delta = 0.0;
    double rate = 0.0;
    Region region = Region::BelowGV;
};

struct EnumerationStats {
    std::uint64_t emitted = 0;
    std::uint64_t skipped_unmapped = 0; ///< tuples with no fully mapped feature
};

/// Streams one record per size-subset of the matrix languages, in
/// lexicographic index order, skipping (and tallying) subsets that share no
/// fully mapped feature. Codes are binary with k = log2(size); memory use is
/// constant per record. size must be 2 or 3.
EnumerationStats enumerate_tuple_codes(
    const FeatureMatrix& matrix, int size,
    const std::function<void(const SurveyRecord&)>& sink,
    PlotkinVariant variant = PlotkinVariant::Standard);

/// Convenience overload collecting all records.
std::vector<SurveyRecord> enumerate_tuple_codes(
    const FeatureMatrix& matrix, int size,
    PlotkinVariant variant = PlotkinVariant::Standard);

struct SubsetSample {
    std::vector<std::size_t> features;
    std::vector<std::size_t> languages;
};

/// Draws feature_count features uniformly without replacement, then
/// language_count languages uniformly from those fully mapped on every drawn
/// feature. Throws InsufficientLanguages when too few languages qualify
/// (callers may redraw with fresh features).
SubsetSample sample_random_subset(const FeatureMatrix& matrix, Rng& rng,
                                  std::size_t feature_count,
                                  std::size_t language_count);

/// 2-D histogram of code points over [0,1] x [0, max rate observed], with
/// per-region totals. Partial grids with identical edges merge by addition.
struct DensityGrid {
    std::vector<double> delta_edges;
    std::vector<double> rate_edges;
    std::vector<std::uint64_t> counts; ///< row-major [delta_bin][rate_bin]
    std::array<std::uint64_t, 3> region_totals{};

    std::size_t delta_bins() const { return delta_edges.size() - 1; }
    std::size_t rate_bins() const { return rate_edges.size() - 1; }
    std::uint64_t at(std::size_t delta_bin, std::size_t rate_bin) const {
        return counts[delta_bin * rate_bins() + rate_bin];
    }
    std::uint64_t total() const;

    /// Adds another grid with identical edges into this one.
    void merge(const DensityGrid& other);
};

DensityGrid density_grid(std::span<const CodePoint> points, std::size_t bins_delta,
                         std::size_t bins_rate,
                         PlotkinVariant variant = PlotkinVariant::Standard);

} // namespace syncode
