#include "l1cent/local.hpp"
#include "l1cent/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace l1cent {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw input_error("alpha must lie in (0, 1]");
}

// ceil(alpha * n) with a guard against the product rounding just above an
// integer (alpha values like k/n must yield exactly k).
int neighborhood_rank(double alpha, int n) {
    int m = static_cast<int>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
    return std::clamp(m, 1, n);
}

std::vector<int> members_from_scores(const std::vector<double>& scores, double alpha) {
    const int n = static_cast<int>(scores.size());
    int rank = neighborhood_rank(alpha, n);
    std::vector<double> sorted(scores);
    std::nth_element(sorted.begin(), sorted.begin() + (rank - 1), sorted.end(),
                     std::greater<>());
    double threshold = sorted[static_cast<size_t>(rank - 1)];
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (scores[static_cast<size_t>(v)] >= threshold) members.push_back(v);
    return members;
}

} // namespace

CentralityVector symmetrized_centrality(const DistanceMatrix& d, std::span<const double> eta,
                                        int i) {
    std::vector<double> boosted(eta.begin(), eta.end());
    double total = 0.0;
    for (double e : eta) total += e;
    boosted[static_cast<size_t>(i)] = total + eta[static_cast<size_t>(i)];
    CentralityVector c = l1_centrality(d, boosted);
    c.measure = Measure::Symmetrized;
    c.focal = i;
    return c;
}

NeighborhoodSet neighborhood(const DistanceMatrix& d, std::span<const double> eta, int i,
                             double alpha) {
    check_alpha(alpha);
    NeighborhoodSet set;
    set.focal = i;
    set.alpha = alpha;
    set.symmetrized_scores = symmetrized_centrality(d, eta, i).values;
    set.members = members_from_scores(set.symmetrized_scores, alpha);
    return set;
}

CentralityVector local_l1_centrality(const DistanceMatrix& d, std::span<const double> eta,
                                     double alpha) {
    check_alpha(alpha);
    const int n = d.size();
    CentralityVector c;
    c.measure = Measure::LocalL1;
    c.alpha = alpha;
    c.values.resize(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        NeighborhoodSet nb = neighborhood(d, eta, k, alpha);
        c.values[static_cast<size_t>(k)] = l1_centrality_restricted(d, eta, nb.members, k);
    }
    return c;
}

MedianSet local_median(const DistanceMatrix& d, std::span<const double> eta, int i,
                       double alpha) {
    NeighborhoodSet nb = neighborhood(d, eta, i, alpha);
    return graph_median_restricted(d, eta, nb.members);
}

MultiscaleEdges multiscale_edges(const DistanceMatrix& d, std::span<const double> eta,
                                 double alpha) {
    check_alpha(alpha);
    const int n = d.size();
    std::vector<std::vector<int>> medians(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k)
        medians[static_cast<size_t>(k)] = local_median(d, eta, k, alpha).indices;

    MultiscaleEdges edges;
    edges.alpha = alpha;
    std::set<int> median_union;
    for (int k = 0; k < n; ++k) {
        for (int m : medians[static_cast<size_t>(k)]) {
            median_union.insert(m);
            if (m != k) edges.arcs.emplace_back(k, m);
        }
    }
    edges.local_medians.assign(median_union.begin(), median_union.end());
    return edges;
}

std::vector<double> default_alpha_grid(int n) {
    std::vector<double> grid;
    for (int k = 5; k <= n; k += 5) grid.push_back(static_cast<double>(k) / n);
    return grid;
}

CentralityProfile centrality_profile(const DistanceMatrix& d, std::span<const double> eta,
                                     std::span<const double> alphas) {
    if (alphas.empty()) throw input_error("locality grid must not be empty");
    for (size_t i = 0; i < alphas.size(); ++i) {
        check_alpha(alphas[i]);
        if (i > 0 && alphas[i] <= alphas[i - 1])
            throw input_error("locality grid must be strictly increasing");
    }
    const int n = d.size();
    const size_t cols = alphas.size();
    CentralityProfile profile;
    profile.alphas.assign(alphas.begin(), alphas.end());
    profile.vertex_count = n;
    profile.values.resize(static_cast<size_t>(n) * cols);

    // Local centralities per vertex; the symmetrized ordering is shared
    // across all grid levels of one focal vertex.
    std::vector<double> raw(static_cast<size_t>(n) * cols);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        std::vector<double> scores = symmetrized_centrality(d, eta, k).values;
        for (size_t c = 0; c < cols; ++c) {
            auto members = members_from_scores(scores, alphas[c]);
            raw[static_cast<size_t>(k) * cols + c] =
                l1_centrality_restricted(d, eta, members, k);
        }
    }

    // Uniform margin per column, then zero-mean per row.
    std::vector<double> column(static_cast<size_t>(n));
    for (size_t c = 0; c < cols; ++c) {
        for (int k = 0; k < n; ++k) column[static_cast<size_t>(k)] = raw[static_cast<size_t>(k) * cols + c];
        auto margin = uniform_margin(column);
        for (int k = 0; k < n; ++k)
            profile.values[static_cast<size_t>(k) * cols + c] = margin[static_cast<size_t>(k)];
    }
    for (int k = 0; k < n; ++k) {
        double* row = profile.values.data() + static_cast<size_t>(k) * cols;
        double mean = 0.0;
        for (size_t c = 0; c < cols; ++c) mean += row[c];
        mean /= static_cast<double>(cols);
        for (size_t c = 0; c < cols; ++c) row[c] -= mean;
    }
    return profile;
}

} // namespace l1cent
