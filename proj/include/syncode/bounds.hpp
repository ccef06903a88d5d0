#pragma once

#include "syncode/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syncode {

/// A code's position in the (delta, rate) parameter plane.
struct CodePoint {
    double delta = 0.0;
    double rate = 0.0;
    int q = 2;
    std::string provenance; ///< optional: language tuple, trajectory step, ...
};

/// Region of the parameter plane relative to the GV curve and Plotkin line.
/// AbovePlotkin is the sufficient condition for lying above the asymptotic
/// bound. Points exactly on a curve belong to the region below it.
enum class Region : std::uint8_t {
    BelowGV = 0,
    BetweenGVAndPlotkin = 1,
    AbovePlotkin = 2,
};

std::string_view to_string(Region region);
Region region_from_string(std::string_view name);

/// The linear Plotkin bound has two readings; Standard is the asymptotic
/// line R = 1 - q*delta/(q-1), which hits zero at delta = (q-1)/q.
/// PaperLiteral is the line R = 1 - delta/q, kept selectable because some
/// texts print it in that form.
enum class PlotkinVariant : std::uint8_t { Standard = 0, PaperLiteral = 1 };

/// q-ary Shannon entropy H_q(delta) with the continuity convention
/// 0*log(0) = 0 at the endpoints. Throws DomainError outside [0,1].
double q_ary_entropy(int q, double delta);

/// Gilbert-Varshamov rate: 1 - H_q(delta) for delta below (q-1)/q, and 0 at
/// or beyond it (where the asymptotic rate is zero).
double gv_rate(int q, double delta);

double plotkin_rate(int q, double delta,
                    PlotkinVariant variant = PlotkinVariant::Standard);

/// Exactly one region per point: BelowGV iff rate <= gv, AbovePlotkin iff
/// rate > plotkin, Between otherwise.
Region classify_point(const CodePoint& point,
                      PlotkinVariant variant = PlotkinVariant::Standard);

/// Exact rational value, always in lowest terms with den > 0.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

/// Thomae's function on d/n: 1 at d = 0, else 1/v where d/n = u/v in lowest
/// terms. Throws DomainError when n = 0 or d > n.
Fraction thomae(std::uint64_t d, std::uint64_t n);

/// The full locus available to codes of absolute rate k: points (d/n, k/n)
/// for 1 <= n <= n_max and 0 <= d <= n. Fixed-k code clouds trace a scaled
/// Thomae graph plus the sub-Thomae points from non-reduced fractions.
std::vector<CodePoint> thomae_reference(double k, std::size_t n_max, int q = 2);

} // namespace syncode
