// reference.hpp - plain serial implementations kept alongside the parallel
// kernels. They take independent algorithmic routes where possible (array
// scans instead of heaps, the literal per-vertex formula instead of the
// row-max form) and back the equivalence tests and the benchmark harness.

#pragma once

#include "l1cent/centrality.hpp"
#include "l1cent/geodesic.hpp"
#include "l1cent/graph.hpp"

#include <span>
#include <vector>

namespace l1cent::ref {

// Single-source distances by linear scan (no priority queue).
std::vector<double> dijkstra_scan(const Graph& g, int source);

// All rows via dijkstra_scan, one source after another.
DistanceMatrix geodesic_serial(const Graph& g);

// Triple-loop relaxation with no parallel pragmas.
DistanceMatrix floyd_warshall_serial(const Graph& g);

// Breadth-first hop counts; matches the geodesic matrix on unit-weight graphs.
std::vector<double> bfs_hops(const Graph& g, int source);

// Literal evaluation of the centrality formula vertex by vertex, divisions
// kept inside the maximum.
std::vector<double> l1_centrality_serial(const DistanceMatrix& d, std::span<const double> eta);

// Single-threaded dependency accumulation.
std::vector<double> betweenness_serial(const DistanceMatrix& d, const Graph& g);

// Geodesic-path enumeration: counts every path within relative tolerance
// 1e-9 of the shortest length. Exponential; intended for n <= 8.
std::vector<double> betweenness_enumerated(const Graph& g);

// Serial loop over focal vertices.
std::vector<double> local_l1_serial(const DistanceMatrix& d, std::span<const double> eta,
                                    double alpha);

// O(m^2) double loop over value pairs.
double gini_pairwise(std::span<const double> values);

} // namespace l1cent::ref
