#include "syncode/svg_plot.hpp"

#include "syncode/text.hpp"
#include "syncode/version.hpp"

#include <ostream>

namespace syncode {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 48.0;
constexpr double kRateMax = 1.6;

double sx(double delta) {
    return kMarginLeft + delta * (kWidth - kMarginLeft - kMarginRight);
}

double sy(double rate) {
    const double clamped = rate < 0.0 ? 0.0 : (rate > kRateMax ? kRateMax : rate);
    return kHeight - kMarginBottom -
           clamped / kRateMax * (kHeight - kMarginTop - kMarginBottom);
}

std::string num(double v) {
    return format_double(v, 2);
}

const char* region_color(Region region) {
    switch (region) {
        case Region::BelowGV: return "#4878a8";
        case Region::BetweenGVAndPlotkin: return "#e08214";
        case Region::AbovePlotkin: return "#c0392b";
    }
    return "#000000";
}

void polyline(std::ostream& out, const Curve& curve, const char* color, const char* dash) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (i) out << ' ';
        out << num(sx(curve[i].first)) << ',' << num(sy(curve[i].second));
    }
    out << "\"/>\n";
}

} // namespace

void render_scatter_svg(std::ostream& out, std::span<const CodePoint> points,
                        std::span<const Curve> extra_curves, const PlotOptions& options) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- syncode " << SYNCODE_VERSION << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
        << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' '
        << num(kHeight) << "\">\n";
    out << "<rect width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
        << "\" fill=\"white\"/>\n";

    // axes and ticks
    out << "<g stroke=\"#222222\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
        << num(sx(1)) << "\" y2=\"" << num(sy(0)) << "\"/>\n";
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
        << num(sx(0)) << "\" y2=\"" << num(sy(kRateMax)) << "\"/>\n";
    out << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double d = i / 4.0;
        out << "<line stroke=\"#222222\" x1=\"" << num(sx(d)) << "\" y1=\"" << num(sy(0))
            << "\" x2=\"" << num(sx(d)) << "\" y2=\"" << num(sy(0) + 5) << "\"/>\n";
        out << "<text x=\"" << num(sx(d)) << "\" y=\"" << num(sy(0) + 20)
            << "\" text-anchor=\"middle\">" << format_double(d, 2) << "</text>\n";
    }
    for (int i = 0; i <= 8; ++i) {
        const double r = kRateMax * i / 8.0;
        out << "<line stroke=\"#222222\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(r))
            << "\" x2=\"" << num(sx(0) - 5) << "\" y2=\"" << num(sy(r)) << "\"/>\n";
        out << "<text x=\"" << num(sx(0) - 9) << "\" y=\"" << num(sy(r) + 4)
            << "\" text-anchor=\"end\">" << format_double(r, 1) << "</text>\n";
    }
    out << "<text x=\"" << num((sx(0) + sx(1)) / 2) << "\" y=\"" << num(kHeight - 10)
        << "\" text-anchor=\"middle\">delta</text>\n";
    out << "<text x=\"16\" y=\"" << num((sy(0) + sy(kRateMax)) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << num((sy(0) + sy(kRateMax)) / 2) << ")\">rate</text>\n";
    out << "</g>\n";

    if (options.draw_bounds) {
        Curve gv;
        Curve plotkin;
        for (int i = 0; i <= options.bound_samples; ++i) {
            const double d = static_cast<double>(i) / options.bound_samples;
            gv.emplace_back(d, gv_rate(options.q, d));
            plotkin.emplace_back(d, plotkin_rate(options.q, d, options.variant));
        }
        polyline(out, gv, "#2a7e43", nullptr);
        polyline(out, plotkin, "#7d3c98", "6,4");
    }
    for (const Curve& curve : extra_curves) polyline(out, curve, "#666666", "2,3");

    for (const CodePoint& p : points) {
        const Region region = classify_point(p, options.variant);
        out << "<circle cx=\"" << num(sx(p.delta)) << "\" cy=\"" << num(sy(p.rate))
            << "\" r=\"2\" fill=\"" << region_color(region) << "\" fill-opacity=\"0.7\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace syncode
