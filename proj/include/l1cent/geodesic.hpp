// geodesic.hpp - dense all-pairs geodesic distance matrix, the shared
// substrate for every centrality measure. Two routes are provided: repeated
// single-source runs (priority queue, parallel across sources) and the
// triple-loop all-pairs relaxation (parallel across rows for each pivot).

#pragma once

#include "l1cent/graph.hpp"

#include <vector>

namespace l1cent {

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<double> data)
        : n_(n), d_(std::move(data)) {}

    int size() const { return n_; }
    double operator()(int i, int j) const {
        return d_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }
    double& at(int i, int j) {
        return d_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }
    const std::vector<double>& data() const { return d_; }

    // Checks zero diagonal, exact symmetry, finiteness, and the triangle
    // inequality (with relative slack `tol` for rounding of path sums).
    // Throws numeric_error on violation.
    void validate(double tol = 1e-12) const;

private:
    int n_ = 0;
    std::vector<double> d_;
};

enum class GeodesicAlgorithm {
    Auto,      // per-source when |E| < n^2/4, all-pairs otherwise
    PerSource, // binary-heap single-source runs, one per vertex
    AllPairs,  // Floyd-Warshall relaxation
};

// Requires a connected graph; a disconnected input raises input_error naming
// one unreachable vertex pair. The result is validated before returning.
DistanceMatrix geodesic_matrix(const Graph& g,
                               GeodesicAlgorithm algorithm = GeodesicAlgorithm::Auto);

// Raw kernels (no connectivity pre-check, no validation); exposed for tests
// and the benchmark harness. Unreachable entries come back as +inf.
DistanceMatrix geodesic_per_source(const Graph& g);
DistanceMatrix geodesic_all_pairs(const Graph& g);

} // namespace l1cent
