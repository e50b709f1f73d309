#include "l1cent/centrality.hpp"
#include "l1cent/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace l1cent {

namespace {

constexpr double kMedianRelTol = 1e-9;
constexpr double kGeodesicTieRelTol = 1e-9;
constexpr double kOracleBisectionTol = 1e-10;

std::vector<int> all_indices(int n) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

double subset_total(std::span<const double> eta, std::span<const int> members) {
    double total = 0.0;
    for (int i : members) total += eta[static_cast<size_t>(i)];
    return total;
}

// 1 - {rowmax over non-focal members of (s_focal - s_j) / d(focal, j)}+ / eta_total.
// Shared by the global and the neighborhood-restricted computations; the
// iteration order is part of the contract (alpha = 1 must reproduce the
// global values exactly).
double one_minus_rowmax(const DistanceMatrix& d, std::span<const int> members,
                        std::span<const double> row_sums, double eta_total, int focal_pos) {
    const int focal = members[static_cast<size_t>(focal_pos)];
    const double s_focal = row_sums[static_cast<size_t>(focal_pos)];
    double row_max = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (size_t p = 0; p < members.size(); ++p) {
        if (static_cast<int>(p) == focal_pos) continue;
        double denom = d(focal, members[p]);
        if (denom == 0.0) continue; // 0/0 convention; off-diagonal zeros cannot occur in valid input
        double ratio = (s_focal - row_sums[p]) / denom;
        row_max = any ? std::max(row_max, ratio) : ratio;
        any = true;
    }
    if (!any) return 1.0; // singleton neighborhood / single-vertex convention
    return 1.0 - std::max(0.0, row_max) / eta_total;
}

} // namespace

std::vector<double> subset_weighted_row_sums(const DistanceMatrix& d,
                                             std::span<const double> eta,
                                             std::span<const int> members) {
    std::vector<double> sums(members.size());
    for (size_t p = 0; p < members.size(); ++p) {
        double s = 0.0;
        for (int i : members) s += eta[static_cast<size_t>(i)] * d(members[p], i);
        sums[p] = s;
    }
    return sums;
}

double l1_centrality_restricted(const DistanceMatrix& d, std::span<const double> eta,
                                std::span<const int> members, int focal) {
    auto sums = subset_weighted_row_sums(d, eta, members);
    double eta_total = subset_total(eta, members);
    int focal_pos = static_cast<int>(std::lower_bound(members.begin(), members.end(), focal) -
                                     members.begin());
    return one_minus_rowmax(d, members, sums, eta_total, focal_pos);
}

MedianSet graph_median_restricted(const DistanceMatrix& d, std::span<const double> eta,
                                  std::span<const int> members) {
    auto sums = subset_weighted_row_sums(d, eta, members);
    double min_obj = *std::min_element(sums.begin(), sums.end());
    double threshold = min_obj + kMedianRelTol * min_obj;
    MedianSet set;
    set.objective = min_obj;
    for (size_t p = 0; p < members.size(); ++p)
        if (sums[p] <= threshold) set.indices.push_back(members[p]);
    return set;
}

MedianSet graph_median(const DistanceMatrix& d, std::span<const double> eta) {
    return graph_median_restricted(d, eta, all_indices(d.size()));
}

CentralityVector l1_centrality(const DistanceMatrix& d, std::span<const double> eta) {
    const int n = d.size();
    auto idx = all_indices(n);
    auto sums = subset_weighted_row_sums(d, eta, idx);
    double eta_total = subset_total(eta, idx);

    CentralityVector c;
    c.measure = Measure::L1;
    c.values.resize(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k)
        c.values[static_cast<size_t>(k)] = one_minus_rowmax(d, idx, sums, eta_total, k);
    return c;
}

double l1_centrality_oracle(const DistanceMatrix& d, std::span<const double> eta, int k) {
    const int n = d.size();
    if (n == 1) return 1.0;
    double eta_total = 0.0;
    for (double e : eta) eta_total += e;

    // Normalized base objectives: obj_j(w) = s_j / eta_total + w * d(j, k).
    std::vector<double> base(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += eta[static_cast<size_t>(i)] * d(j, i);
        base[static_cast<size_t>(j)] = s / eta_total;
    }
    auto is_median = [&](double w) {
        double own = base[static_cast<size_t>(k)]; // d(k,k) = 0, unaffected by w
        for (int j = 0; j < n; ++j)
            if (own > base[static_cast<size_t>(j)] + w * d(j, k)) return false;
        return true;
    };

    if (is_median(0.0)) return 1.0;
    double lo = 0.0, hi = 1.0; // w = 1 always suffices: the vertex then holds half the mass
    while (hi - lo > kOracleBisectionTol) {
        double mid = 0.5 * (lo + hi);
        if (is_median(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 1.0 - 0.5 * (lo + hi);
}

CentralityVector degree_centrality(const Graph& g) {
    CentralityVector c;
    c.measure = Measure::Degree;
    c.values.resize(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i)
        c.values[static_cast<size_t>(i)] =
            static_cast<double>(g.adjacency()[static_cast<size_t>(i)].size());
    return c;
}

CentralityVector closeness_centrality(const DistanceMatrix& d) {
    const int n = d.size();
    if (n < 2) throw input_error("closeness centrality needs at least two vertices");
    CentralityVector c;
    c.measure = Measure::Closeness;
    c.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double total = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) total += d(i, j);
        c.values[static_cast<size_t>(i)] = 1.0 / total;
    }
    return c;
}

CentralityVector betweenness_centrality(const DistanceMatrix& d, const Graph& g) {
    const int n = d.size();
    CentralityVector c;
    c.measure = Measure::Betweenness;
    c.values.assign(static_cast<size_t>(n), 0.0);
    if (n < 3) return c;

    // Per-source dependency accumulation over the geodesic DAG implied by the
    // distance matrix. Each source fills its own row; rows are then reduced
    // in source order so the result is independent of the thread count.
    std::vector<double> contrib(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);

    auto is_pred = [&](double du, double w, double dv) {
        // u precedes v along a geodesic when d(s,u) + w matches d(s,v).
        double sum = du + w;
        return du < dv && std::abs(sum - dv) <= kGeodesicTieRelTol * std::max(sum, dv);
    };

#pragma omp parallel
    {
        std::vector<int> order(static_cast<size_t>(n));
        std::vector<double> sigma(static_cast<size_t>(n));
        std::vector<double> delta(static_cast<size_t>(n));
#pragma omp for schedule(dynamic)
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
            double* row = contrib.data() + static_cast<size_t>(s) * static_cast<size_t>(n);
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int v = *it;
                if (v == s) continue;
                for (auto [u, w] : g.adjacency()[static_cast<size_t>(v)])
                    if (is_pred(d(s, u), w, d(s, v)))
                        delta[static_cast<size_t>(u)] += sigma[static_cast<size_t>(u)] /
                                                         sigma[static_cast<size_t>(v)] *
                                                         (1.0 + delta[static_cast<size_t>(v)]);
                row[v] = delta[static_cast<size_t>(v)];
            }
            row[s] = 0.0;
        }
    }
    for (int s = 0; s < n; ++s) {
        const double* row = contrib.data() + static_cast<size_t>(s) * static_cast<size_t>(n);
        for (int v = 0; v < n; ++v) c.values[static_cast<size_t>(v)] += row[v];
    }
    // Ordered source/target pairs were counted; the measure is over unordered pairs.
    for (double& v : c.values) v *= 0.5;
    return c;
}

std::vector<double> average_ranks(std::span<const double> values) {
    const size_t n = values.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)];
    });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[static_cast<size_t>(order[j + 1])] ==
                                values[static_cast<size_t>(order[i])])
            ++j;
        double avg = 0.5 * static_cast<double>(i + j) + 1.0; // mean of ranks i+1 .. j+1
        for (size_t k = i; k <= j; ++k) ranks[static_cast<size_t>(order[k])] = avg;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> uniform_margin(std::span<const double> values) {
    auto ranks = average_ranks(values);
    const double n = static_cast<double>(values.size());
    for (double& r : ranks) r /= n;
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw input_error("correlation needs two equal-length series of size >= 2");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw input_error("correlation undefined for constant input");
    return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const double> x, std::span<const double> y) {
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    return pearson(rx, ry);
}

DepthCheck euclidean_depth_check(const std::vector<std::vector<double>>& points,
                                 std::span<const double> eta, int focal) {
    const size_t m = points.size();
    if (m < 2) throw input_error("depth check needs at least two points");
    if (eta.size() != m) throw input_error("multiplicity count must match point count");
    const size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw input_error("points must share one dimension");

    const auto& x1 = points[static_cast<size_t>(focal)];
    auto norm_to_focal = [&](const std::vector<double>& p) {
        double s = 0.0;
        for (size_t k = 0; k < dim; ++k) {
            double diff = p[k] - x1[k];
            s += diff * diff;
        }
        return std::sqrt(s);
    };
    double eta_total = 0.0;
    for (double e : eta) eta_total += e;

    // depth = 1 - || weighted mean of unit vectors toward the other points ||
    std::vector<double> mean_dir(dim, 0.0);
    for (size_t i = 0; i < m; ++i) {
        if (static_cast<int>(i) == focal) continue;
        double norm = norm_to_focal(points[i]);
        if (norm == 0.0)
            throw input_error("point " + std::to_string(i) + " duplicates the focal point");
        for (size_t k = 0; k < dim; ++k)
            mean_dir[k] += eta[i] / eta_total * (points[i][k] - x1[k]) / norm;
    }
    double mean_norm = 0.0;
    for (double v : mean_dir) mean_norm += v * v;
    mean_norm = std::sqrt(mean_norm);

    auto dist = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (size_t k = 0; k < dim; ++k) {
            double diff = a[k] - b[k];
            s += diff * diff;
        }
        return std::sqrt(s);
    };
    double row_max = 0.0;
    for (size_t j = 0; j < m; ++j) {
        if (static_cast<int>(j) == focal) continue;
        double num = 0.0;
        for (size_t i = 0; i < m; ++i)
            num += eta[i] * (dist(x1, points[i]) - dist(points[j], points[i]));
        double ratio = num / (eta_total * norm_to_focal(points[j]));
        row_max = std::max(row_max, ratio);
    }
    return DepthCheck{1.0 - row_max, 1.0 - mean_norm};
}

} // namespace l1cent
