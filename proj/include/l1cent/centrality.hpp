// centrality.hpp - graph medians, L1 centrality (closed form, row-max over
// the distance matrix), the three classical comparison measures, rank
// correlation, and the Euclidean-norm depth consistency check.

#pragma once

#include "l1cent/geodesic.hpp"
#include "l1cent/graph.hpp"

#include <span>
#include <vector>

namespace l1cent {

enum class Measure { L1, Degree, Closeness, Betweenness, LocalL1, Symmetrized };

struct CentralityVector {
    Measure measure = Measure::L1;
    double alpha = 1.0; // meaningful for LocalL1
    int focal = -1;     // meaningful for Symmetrized
    std::vector<double> values;
};

struct MedianSet {
    std::vector<int> indices; // ascending, nonempty
    double objective = 0.0;   // minimized sum of multiplicity-weighted distances
};

// All argmins of sum_j eta_j * d(v_i, v_j), admitting ties within 1e-9
// relative of the minimum objective.
MedianSet graph_median(const DistanceMatrix& d, std::span<const double> eta);

// Closed-form L1 centrality of every vertex; O(n^2) given the distance
// matrix, row maxima computed in parallel. Values lie in [0,1] with 1 exactly
// on the graph medians; n = 1 yields the single value 1.
CentralityVector l1_centrality(const DistanceMatrix& d, std::span<const double> eta);

// Definition-level oracle: bisection (to 1e-10) on the extra multiplicity w
// that turns vertex k into a median of the normalized graph. Deliberately
// avoids the closed form; intended for small test graphs.
double l1_centrality_oracle(const DistanceMatrix& d, std::span<const double> eta, int k);

// Building blocks shared with the local module. `members` must be ascending
// and contain `focal`. Summation order is fixed (ascending member order) so
// that a full-index subset reproduces the global computation bit for bit.
std::vector<double> subset_weighted_row_sums(const DistanceMatrix& d,
                                             std::span<const double> eta,
                                             std::span<const int> members);
double l1_centrality_restricted(const DistanceMatrix& d, std::span<const double> eta,
                                std::span<const int> members, int focal);
MedianSet graph_median_restricted(const DistanceMatrix& d, std::span<const double> eta,
                                  std::span<const int> members);

// Count of incident edges; weights and multiplicities are ignored.
CentralityVector degree_centrality(const Graph& g);

// 1 / sum of distances to all other vertices; requires n >= 2.
CentralityVector closeness_centrality(const DistanceMatrix& d);

// Fraction of geodesic paths through each vertex, summed over unordered
// endpoint pairs (endpoints excluded). A path counts as geodesic when its
// length is within relative tolerance 1e-9 of the matrix entry; counting uses
// per-source dependency accumulation with real-valued path counts.
CentralityVector betweenness_centrality(const DistanceMatrix& d, const Graph& g);

// Average ranks (1-based, ties averaged).
std::vector<double> average_ranks(std::span<const double> values);
// Rank transform to a uniform margin: lowest value -> 1/n, ... highest -> 1
// (ties averaged).
std::vector<double> uniform_margin(std::span<const double> values);

double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);

struct DepthCheck {
    double lhs;   // depth estimate: closed form with Euclidean norms
    double depth; // 1 - norm of the multiplicity-weighted mean unit vector
};

// Consistency check between the graph formula (with Euclidean distances) and
// L1 data depth. `points` are rows of equal dimension; every non-focal point
// must differ from the focal one.
DepthCheck euclidean_depth_check(const std::vector<std::vector<double>>& points,
                                 std::span<const double> eta, int focal);

} // namespace l1cent
