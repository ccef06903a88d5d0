#include "syncode/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace syncode {

std::string_view to_string(Region region) {
    switch (region) {
        case Region::BelowGV: return "below_gv";
        case Region::BetweenGVAndPlotkin: return "between_gv_plotkin";
        case Region::AbovePlotkin: return "above_plotkin";
    }
    return "?";
}

Region region_from_string(std::string_view name) {
    if (name == "below_gv") return Region::BelowGV;
    if (name == "between_gv_plotkin") return Region::BetweenGVAndPlotkin;
    if (name == "above_plotkin") return Region::AbovePlotkin;
    throw DomainError("unknown region tag: " + std::string(name));
}

namespace {

void check_domain(int q, double delta) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw DomainError("delta must lie in [0,1], got " + std::to_string(delta));
    }
}

} // namespace

double q_ary_entropy(int q, double delta) {
    check_domain(q, delta);
    const double logq = std::log(static_cast<double>(q));
    double h = delta * std::log(static_cast<double>(q - 1)) / logq;
    if (delta > 0.0) h -= delta * std::log(delta) / logq;
    if (delta < 1.0) h -= (1.0 - delta) * std::log1p(-delta) / logq;
    return h;
}

double gv_rate(int q, double delta) {
    check_domain(q, delta);
    // 1 - H_q dips to zero at delta = (q-1)/q and turns positive again past
    // it, where no positive asymptotic rate exists; the curve is pinned to
    // zero there so the Plotkin line stays above it on all of [0,1].
    if (delta >= static_cast<double>(q - 1) / q) return 0.0;
    return std::max(0.0, 1.0 - q_ary_entropy(q, delta));
}

double plotkin_rate(int q, double delta, PlotkinVariant variant) {
    check_domain(q, delta);
    const double line = variant == PlotkinVariant::Standard
                            ? 1.0 - static_cast<double>(q) * delta / (q - 1)
                            : 1.0 - delta / static_cast<double>(q);
    return std::max(0.0, line);
}

Region classify_point(const CodePoint& point, PlotkinVariant variant) {
    if (point.rate <= gv_rate(point.q, point.delta)) return Region::BelowGV;
    if (point.rate > plotkin_rate(point.q, point.delta, variant)) {
        return Region::AbovePlotkin;
    }
    return Region::BetweenGVAndPlotkin;
}

Fraction thomae(std::uint64_t d, std::uint64_t n) {
    if (n == 0) throw DomainError("thomae needs a positive denominator");
    if (d > n) throw DomainError("thomae argument d/n must lie in [0,1]");
    if (d == 0) return Fraction{1, 1};
    const std::uint64_t g = std::gcd(d, n);
    return Fraction{1, n / g};
}

std::vector<CodePoint> thomae_reference(double k, std::size_t n_max, int q) {
    std::vector<CodePoint> points;
    points.reserve(n_max * (n_max + 3) / 2);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double rate = k / static_cast<double>(n);
        for (std::size_t d = 0; d <= n; ++d) {
            points.push_back(CodePoint{
                static_cast<double>(d) / static_cast<double>(n), rate, q, {}});
        }
    }
    return points;
}

} // namespace syncode
