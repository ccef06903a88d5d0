#include "syncode/survey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace syncode {

namespace {

/// Hamming distance between two rows restricted to the masked coordinates.
std::size_t masked_distance(std::span<const std::uint64_t> va,
                            std::span<const std::uint64_t> vb,
                            std::span<const std::uint64_t> mask) {
    std::size_t count = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) {
        count += static_cast<std::size_t>(std::popcount((va[w] ^ vb[w]) & mask[w]));
    }
    return count;
}

std::size_t popcount_words(std::span<const std::uint64_t> a) {
    std::size_t count = 0;
    for (std::uint64_t w : a) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

SurveyRecord finish_record(std::vector<std::string> langs, std::size_t n, std::size_t d,
                           double k, PlotkinVariant variant) {
    SurveyRecord rec;
    rec.languages = std::move(langs);
    rec.n = n;
    rec.d = d;
    rec.k = k;
    rec.delta = static_cast<double>(d) / static_cast<double>(n);
    rec.rate = k / static_cast<double>(n);
    rec.region = classify_point(CodePoint{rec.delta, rec.rate, 2, {}}, variant);
    return rec;
}

} // namespace

EnumerationStats enumerate_tuple_codes(
    const FeatureMatrix& matrix, int size,
    const std::function<void(const SurveyRecord&)>& sink, PlotkinVariant variant) {
    if (size != 2 && size != 3) throw DomainError("tuple size must be 2 or 3");
    const std::size_t nl = matrix.language_count();
    const auto& names = matrix.languages();
    EnumerationStats stats;
    const double k = std::log2(static_cast<double>(size));

    std::vector<std::uint64_t> mask(matrix.mask_words());
    if (size == 2) {
        for (std::size_t a = 0; a < nl; ++a) {
            const auto da = matrix.defined_mask(a);
            const auto va = matrix.value_mask(a);
            for (std::size_t b = a + 1; b < nl; ++b) {
                const auto db = matrix.defined_mask(b);
                for (std::size_t w = 0; w < mask.size(); ++w) mask[w] = da[w] & db[w];
                const std::size_t n = popcount_words(mask);
                if (n == 0) {
                    ++stats.skipped_unmapped;
                    continue;
                }
                const std::size_t d = masked_distance(va, matrix.value_mask(b), mask);
                ++stats.emitted;
                sink(finish_record({names[a], names[b]}, n, d, k, variant));
            }
        }
        return stats;
    }

    std::vector<std::uint64_t> ab(matrix.mask_words());
    for (std::size_t a = 0; a < nl; ++a) {
        const auto da = matrix.defined_mask(a);
        const auto va = matrix.value_mask(a);
        for (std::size_t b = a + 1; b < nl; ++b) {
            const auto db = matrix.defined_mask(b);
            const auto vb = matrix.value_mask(b);
            for (std::size_t w = 0; w < ab.size(); ++w) ab[w] = da[w] & db[w];
            for (std::size_t c = b + 1; c < nl; ++c) {
                const auto dc = matrix.defined_mask(c);
                for (std::size_t w = 0; w < mask.size(); ++w) mask[w] = ab[w] & dc[w];
                const std::size_t n = popcount_words(mask);
                if (n == 0) {
                    ++stats.skipped_unmapped;
                    continue;
                }
                const auto vc = matrix.value_mask(c);
                std::size_t d = masked_distance(va, vb, mask);
                d = std::min(d, masked_distance(va, vc, mask));
                d = std::min(d, masked_distance(vb, vc, mask));
                ++stats.emitted;
                sink(finish_record({names[a], names[b], names[c]}, n, d, k, variant));
            }
        }
    }
    return stats;
}

std::vector<SurveyRecord> enumerate_tuple_codes(const FeatureMatrix& matrix, int size,
                                                PlotkinVariant variant) {
    std::vector<SurveyRecord> records;
    enumerate_tuple_codes(
        matrix, size, [&](const SurveyRecord& rec) { records.push_back(rec); }, variant);
    return records;
}

SubsetSample sample_random_subset(const FeatureMatrix& matrix, Rng& rng,
                                  std::size_t feature_count, std::size_t language_count) {
    if (feature_count == 0 || language_count == 0) {
        throw DomainError("subset counts must be at least 1");
    }
    if (feature_count > matrix.feature_count()) {
        throw DomainError("feature_count exceeds corpus features");
    }

    // partial Fisher-Yates over the feature indices
    std::vector<std::size_t> pool(matrix.feature_count());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    SubsetSample sample;
    sample.features.reserve(feature_count);
    for (std::size_t i = 0; i < feature_count; ++i) {
        const std::size_t j = i + rng.uniform_index(pool.size() - i);
        std::swap(pool[i], pool[j]);
        sample.features.push_back(pool[i]);
    }

    std::vector<std::size_t> eligible;
    for (std::size_t l = 0; l < matrix.language_count(); ++l) {
        const auto def = matrix.defined_mask(l);
        bool all = true;
        for (std::size_t f : sample.features) {
            if (!(def[f / 64] >> (f % 64) & 1)) {
                all = false;
                break;
            }
        }
        if (all) eligible.push_back(l);
    }
    if (eligible.size() < language_count) {
        throw InsufficientLanguages("only " + std::to_string(eligible.size()) +
                                    " language(s) map all drawn features, need " +
                                    std::to_string(language_count));
    }
    sample.languages.reserve(language_count);
    for (std::size_t i = 0; i < language_count; ++i) {
        const std::size_t j = i + rng.uniform_index(eligible.size() - i);
        std::swap(eligible[i], eligible[j]);
        sample.languages.push_back(eligible[i]);
    }
    return sample;
}

std::uint64_t DensityGrid::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

void DensityGrid::merge(const DensityGrid& other) {
    if (delta_edges != other.delta_edges || rate_edges != other.rate_edges) {
        throw DomainError("cannot merge density grids with different bin edges");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    for (std::size_t r = 0; r < region_totals.size(); ++r) {
        region_totals[r] += other.region_totals[r];
    }
}

DensityGrid density_grid(std::span<const CodePoint> points, std::size_t bins_delta,
                         std::size_t bins_rate, PlotkinVariant variant) {
    if (points.empty()) throw EmptyInput("density grid needs at least one point");
    if (bins_delta == 0 || bins_rate == 0) throw DomainError("bin counts must be >= 1");

    double rate_hi = 0.0;
    for (const CodePoint& p : points) rate_hi = std::max(rate_hi, p.rate);
    if (rate_hi <= 0.0) rate_hi = 1.0;

    DensityGrid grid;
    grid.delta_edges.resize(bins_delta + 1);
    for (std::size_t i = 0; i <= bins_delta; ++i) {
        grid.delta_edges[i] = static_cast<double>(i) / static_cast<double>(bins_delta);
    }
    grid.rate_edges.resize(bins_rate + 1);
    for (std::size_t i = 0; i <= bins_rate; ++i) {
        grid.rate_edges[i] = rate_hi * static_cast<double>(i) / static_cast<double>(bins_rate);
    }
    grid.counts.assign(bins_delta * bins_rate, 0);

    for (const CodePoint& p : points) {
        auto bin = [](double x, double lo, double hi, std::size_t bins) {
            const double t = (x - lo) / (hi - lo);
            auto i = static_cast<std::size_t>(
                std::clamp(t * static_cast<double>(bins), 0.0,
                           static_cast<double>(bins) - 1.0));
            return i;
        };
        const std::size_t bd = bin(p.delta, 0.0, 1.0, bins_delta);
        const std::size_t br = bin(p.rate, 0.0, rate_hi, bins_rate);
        ++grid.counts[bd * bins_rate + br];
        ++grid.region_totals[static_cast<std::size_t>(classify_point(p, variant))];
    }
    return grid;
}

} // namespace syncode
