// local.hpp - symmetrization, centrality-based neighborhoods, local L1
// centrality, local medians, the multiscale directed-edge representation,
// and centrality profiles over a locality grid.

#pragma once

#include "l1cent/centrality.hpp"

#include <span>
#include <utility>
#include <vector>

namespace l1cent {

struct NeighborhoodSet {
    int focal = 0;
    double alpha = 1.0;
    std::vector<int> members; // ascending; contains focal; |members| >= ceil(alpha * n)
    std::vector<double> symmetrized_scores; // all n scores used for the selection
};

struct MultiscaleEdges {
    double alpha = 1.0;
    std::vector<std::pair<int, int>> arcs; // (vertex -> local median), self arcs omitted
    std::vector<int> local_medians;        // every vertex appearing in some local median set
};

struct CentralityProfile {
    std::vector<double> alphas;     // increasing grid in (0, 1]
    std::vector<double> values;     // n x |alphas|, row-major per vertex
    int vertex_count = 0;

    double at(int vertex, int column) const {
        return values[static_cast<size_t>(vertex) * alphas.size() + static_cast<size_t>(column)];
    }
};

// L1 centrality of the graph mirrored about vertex i, computed without
// building the (2n-1)-vertex graph: the focal multiplicity is replaced by
// eta_total + eta_i.
CentralityVector symmetrized_centrality(const DistanceMatrix& d, std::span<const double> eta,
                                        int i);

// Vertices whose symmetrized score reaches the ceil(alpha*n)-th largest one
// (threshold ties all included).
NeighborhoodSet neighborhood(const DistanceMatrix& d, std::span<const double> eta, int i,
                             double alpha);

// Per-vertex centrality restricted to that vertex's neighborhood, using the
// original distance submatrix. alpha = 1 reproduces l1_centrality bit for bit.
CentralityVector local_l1_centrality(const DistanceMatrix& d, std::span<const double> eta,
                                     double alpha);

// Median of the problem restricted to the neighborhood of vertex i.
MedianSet local_median(const DistanceMatrix& d, std::span<const double> eta, int i, double alpha);

MultiscaleEdges multiscale_edges(const DistanceMatrix& d, std::span<const double> eta,
                                 double alpha);

// Columns: local centralities at each grid level transformed to a uniform
// margin; rows then centered to zero mean.
CentralityProfile centrality_profile(const DistanceMatrix& d, std::span<const double> eta,
                                     std::span<const double> alphas);

// Default grid {5/n, 10/n, ...} clipped to (0, 1].
std::vector<double> default_alpha_grid(int n);

} // namespace l1cent
