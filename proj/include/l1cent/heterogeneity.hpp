// heterogeneity.hpp - Lorenz curve and Gini coefficient over a set of
// nonnegative centrality measurements.

#pragma once

#include <span>
#include <vector>

namespace l1cent {

struct LorenzCurve {
    std::vector<double> sorted_values; // ascending
    // knots[k] = L(k/m) for k = 0..m; piecewise linear in between
    std::vector<double> knots;
    double gini = 0.0;
};

// Empirical Lorenz curve: L(k/m) = (sum of the k smallest) / total.
// Requires m >= 1, all values >= 0, at least one positive.
LorenzCurve lorenz(std::span<const double> values);

// Normalized mean absolute pairwise difference, computed through the sorted
// O(m log m) identity; equals twice the area between the diagonal and the
// Lorenz curve.
double gini(std::span<const double> values);

} // namespace l1cent
