#include "l1cent/heterogeneity.hpp"
#include "l1cent/error.hpp"

#include <algorithm>
#include <cmath>

namespace l1cent {

namespace {

std::vector<double> checked_sorted(std::span<const double> values) {
    if (values.empty()) throw input_error("at least one value required");
    std::vector<double> sorted(values.begin(), values.end());
    for (double v : sorted)
        if (!std::isfinite(v) || v < 0.0)
            throw input_error("values must be finite and nonnegative");
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() == 0.0) throw input_error("all-zero input has no Lorenz curve");
    return sorted;
}

double gini_sorted(const std::vector<double>& sorted) {
    const double m = static_cast<double>(sorted.size());
    double total = 0.0;
    double weighted = 0.0; // sum over i of (2i - 1 - m) x_(i), i = 1..m
    for (size_t i = 0; i < sorted.size(); ++i) {
        total += sorted[i];
        weighted += (2.0 * static_cast<double>(i + 1) - 1.0 - m) * sorted[i];
    }
    return weighted / (m * total);
}

} // namespace

LorenzCurve lorenz(std::span<const double> values) {
    LorenzCurve curve;
    curve.sorted_values = checked_sorted(values);
    const size_t m = curve.sorted_values.size();
    double total = 0.0;
    for (double v : curve.sorted_values) total += v;
    curve.knots.resize(m + 1);
    curve.knots[0] = 0.0;
    double running = 0.0;
    for (size_t k = 0; k < m; ++k) {
        running += curve.sorted_values[k];
        curve.knots[k + 1] = running / total;
    }
    curve.gini = gini_sorted(curve.sorted_values);
    return curve;
}

double gini(std::span<const double> values) {
    return gini_sorted(checked_sorted(values));
}

} // namespace l1cent
