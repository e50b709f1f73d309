#include "l1cent/geodesic.hpp"
#include "l1cent/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace l1cent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void dijkstra_row(const Graph& g, int source, double* dist) {
    const int n = g.size();
    std::fill(dist, dist + n, kInf);
    dist[source] = 0.0;
    using Item = std::pair<double, int>; // (distance, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue; // stale entry
        for (auto [v, w] : g.adjacency()[static_cast<size_t>(u)]) {
            double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                queue.emplace(nd, v);
            }
        }
    }
}

} // namespace

void DistanceMatrix::validate(double tol) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        if ((*this)(i, i) != 0.0)
            throw numeric_error("distance matrix diagonal must be zero");
        for (int j = 0; j < n; ++j) {
            double v = (*this)(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw numeric_error("distance matrix entries must be finite and nonnegative");
            if (v != (*this)(j, i))
                throw numeric_error("distance matrix must be symmetric");
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const double dik = (*this)(i, k);
            for (int j = 0; j < n; ++j) {
                double direct = (*this)(i, j);
                double via = dik + (*this)(k, j);
                if (direct > via + tol * std::max(direct, via))
                    throw numeric_error("triangle inequality violated");
            }
        }
}

DistanceMatrix geodesic_per_source(const Graph& g) {
    const int n = g.size();
    std::vector<double> d(static_cast<size_t>(n) * static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s)
        dijkstra_row(g, s, d.data() + static_cast<size_t>(s) * static_cast<size_t>(n));
    DistanceMatrix m(n, std::move(d));
    // Rows from independent runs can disagree in the last bits; take the
    // pairwise min so the matrix is exactly symmetric.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = std::min(m(i, j), m(j, i));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

DistanceMatrix geodesic_all_pairs(const Graph& g) {
    const int n = g.size();
    std::vector<double> d(static_cast<size_t>(n) * static_cast<size_t>(n), kInf);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
    for (const Edge& e : g.edges()) {
        d[static_cast<size_t>(e.u) * n + e.v] = e.weight;
        d[static_cast<size_t>(e.v) * n + e.u] = e.weight;
    }
    for (int k = 0; k < n; ++k) {
        const double* row_k = d.data() + static_cast<size_t>(k) * n;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            double* row_i = d.data() + static_cast<size_t>(i) * n;
            const double dik = row_i[k];
            if (dik == kInf) continue;
            for (int j = 0; j < n; ++j) {
                double via = dik + row_k[j];
                if (via < row_i[j]) row_i[j] = via;
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix geodesic_matrix(const Graph& g, GeodesicAlgorithm algorithm) {
    auto report = connectivity(g);
    if (!report.connected) {
        const auto& a = report.components[0];
        const auto& b = report.components[1];
        throw input_error("graph is disconnected: no path between '" + g.label(a.front()) +
                          "' and '" + g.label(b.front()) + "'");
    }
    if (algorithm == GeodesicAlgorithm::Auto) {
        double n = g.size();
        algorithm = (g.edge_count() < n * n / 4.0) ? GeodesicAlgorithm::PerSource
                                                   : GeodesicAlgorithm::AllPairs;
    }
    DistanceMatrix m = (algorithm == GeodesicAlgorithm::PerSource) ? geodesic_per_source(g)
                                                                   : geodesic_all_pairs(g);
    m.validate();
    return m;
}

} // namespace l1cent
