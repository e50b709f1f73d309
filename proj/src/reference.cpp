#include "l1cent/reference.hpp"
#include "l1cent/local.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace l1cent::ref {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> dijkstra_scan(const Graph& g, int source) {
    const int n = g.size();
    std::vector<double> dist(static_cast<size_t>(n), kInf);
    std::vector<char> done(static_cast<size_t>(n), 0);
    dist[static_cast<size_t>(source)] = 0.0;
    for (int round = 0; round < n; ++round) {
        int u = -1;
        double best = kInf;
        for (int v = 0; v < n; ++v)
            if (!done[static_cast<size_t>(v)] && dist[static_cast<size_t>(v)] < best) {
                best = dist[static_cast<size_t>(v)];
                u = v;
            }
        if (u < 0) break;
        done[static_cast<size_t>(u)] = 1;
        for (auto [v, w] : g.adjacency()[static_cast<size_t>(u)])
            dist[static_cast<size_t>(v)] =
                std::min(dist[static_cast<size_t>(v)], dist[static_cast<size_t>(u)] + w);
    }
    return dist;
}

DistanceMatrix geodesic_serial(const Graph& g) {
    const int n = g.size();
    std::vector<double> d(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto row = dijkstra_scan(g, s);
        std::copy(row.begin(), row.end(), d.begin() + static_cast<size_t>(s) * n);
    }
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix floyd_warshall_serial(const Graph& g) {
    const int n = g.size();
    std::vector<double> d(static_cast<size_t>(n) * static_cast<size_t>(n), kInf);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
    for (const Edge& e : g.edges()) {
        d[static_cast<size_t>(e.u) * n + e.v] = e.weight;
        d[static_cast<size_t>(e.v) * n + e.u] = e.weight;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            double dik = d[static_cast<size_t>(i) * n + k];
            if (dik == kInf) continue;
            for (int j = 0; j < n; ++j) {
                double via = dik + d[static_cast<size_t>(k) * n + j];
                if (via < d[static_cast<size_t>(i) * n + j])
                    d[static_cast<size_t>(i) * n + j] = via;
            }
        }
    return DistanceMatrix(n, std::move(d));
}

std::vector<double> bfs_hops(const Graph& g, int source) {
    const int n = g.size();
    std::vector<double> hops(static_cast<size_t>(n), kInf);
    std::deque<int> queue{source};
    hops[static_cast<size_t>(source)] = 0.0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [v, w] : g.adjacency()[static_cast<size_t>(u)]) {
            (void)w;
            if (hops[static_cast<size_t>(v)] == kInf) {
                hops[static_cast<size_t>(v)] = hops[static_cast<size_t>(u)] + 1.0;
                queue.push_back(v);
            }
        }
    }
    return hops;
}

std::vector<double> l1_centrality_serial(const DistanceMatrix& d, std::span<const double> eta) {
    const int n = d.size();
    double eta_total = 0.0;
    for (double e : eta) eta_total += e;
    std::vector<double> values(static_cast<size_t>(n), 1.0);
    for (int k = 0; k < n; ++k) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            double num = 0.0;
            for (int i = 0; i < n; ++i)
                num += eta[static_cast<size_t>(i)] * (d(k, i) - d(j, i));
            worst = std::max(worst, num / (eta_total * d(j, k)));
        }
        values[static_cast<size_t>(k)] = 1.0 - worst;
    }
    return values;
}

std::vector<double> betweenness_serial(const DistanceMatrix& d, const Graph& g) {
    const int n = d.size();
    std::vector<double> bc(static_cast<size_t>(n), 0.0);
    if (n < 3) return bc;
    const double tol = 1e-9;
    auto is_pred = [&](double du, double w, double dv) {
        double sum = du + w;
        return du < dv && std::abs(sum - dv) <= tol * std::max(sum, dv);
    };
    std::vector<int> order(static_cast<size_t>(n));
    std::vector<double> sigma(static_cast<size_t>(n)), delta(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            double da = d(s, a), db = d(s, b);
            return da != db ? da < db : a < b;
        });
        std::fill(sigma.begin(), sigma.end(), 0.0);
        sigma[static_cast<size_t>(s)] = 1.0;
        for (int v : order) {
            if (v == s) continue;
            double count = 0.0;
            for (auto [u, w] : g.adjacency()[static_cast<size_t>(v)])
                if (is_pred(d(s, u), w, d(s, v))) count += sigma[static_cast<size_t>(u)];
            sigma[static_cast<size_t>(v)] = count;
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            if (v == s) continue;
            for (auto [u, w] : g.adjacency()[static_cast<size_t>(v)])
                if (is_pred(d(s, u), w, d(s, v)))
                    delta[static_cast<size_t>(u)] += sigma[static_cast<size_t>(u)] /
                                                     sigma[static_cast<size_t>(v)] *
                                                     (1.0 + delta[static_cast<size_t>(v)]);
            bc[static_cast<size_t>(v)] += delta[static_cast<size_t>(v)];
        }
    }
    for (double& v : bc) v *= 0.5;
    return bc;
}

std::vector<double> betweenness_enumerated(const Graph& g) {
    const int n = g.size();
    auto d = geodesic_serial(g);
    std::vector<double> bc(static_cast<size_t>(n), 0.0);
    const double tol = 1e-9;

    // All simple paths from s to t no longer than the geodesic (within
    // tolerance), tracked with interior-vertex visit counts.
    std::vector<int> on_path;
    std::vector<char> visited(static_cast<size_t>(n), 0);
    double path_count = 0.0;
    std::vector<double> through(static_cast<size_t>(n), 0.0);

    std::function<void(int, int, double, double)> walk = [&](int u, int t, double len,
                                                             double limit) {
        if (u == t) {
            path_count += 1.0;
            for (int v : on_path) through[static_cast<size_t>(v)] += 1.0;
            return;
        }
        for (auto [v, w] : g.adjacency()[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(v)]) continue;
            double nl = len + w;
            if (nl > limit) continue;
            visited[static_cast<size_t>(v)] = 1;
            if (v != t) on_path.push_back(v);
            walk(v, t, nl, limit);
            if (v != t) on_path.pop_back();
            visited[static_cast<size_t>(v)] = 0;
        }
    };

    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            path_count = 0.0;
            std::fill(through.begin(), through.end(), 0.0);
            std::fill(visited.begin(), visited.end(), 0);
            on_path.clear();
            visited[static_cast<size_t>(s)] = 1;
            double limit = d(s, t) * (1.0 + tol);
            walk(s, t, 0.0, limit);
            for (int v = 0; v < n; ++v)
                if (v != s && v != t && through[static_cast<size_t>(v)] > 0.0)
                    bc[static_cast<size_t>(v)] += through[static_cast<size_t>(v)] / path_count;
        }
    return bc;
}

std::vector<double> local_l1_serial(const DistanceMatrix& d, std::span<const double> eta,
                                    double alpha) {
    const int n = d.size();
    std::vector<double> values(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        NeighborhoodSet nb = neighborhood(d, eta, k, alpha);
        values[static_cast<size_t>(k)] = l1_centrality_restricted(d, eta, nb.members, k);
    }
    return values;
}

double gini_pairwise(std::span<const double> values) {
    const double m = static_cast<double>(values.size());
    double total = 0.0, diff = 0.0;
    for (double v : values) total += v;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < values.size(); ++j) diff += std::abs(values[i] - values[j]);
    return diff / (2.0 * m * m * (total / m));
}

} // namespace l1cent::ref
