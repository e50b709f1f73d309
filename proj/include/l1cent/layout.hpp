// layout.hpp - target-plot layout: radially constrained nonmetric MDS that
// minimizes Kruskal stress over vertex angles only, with radii fixed to
// -ln(centrality).

#pragma once

#include "l1cent/centrality.hpp"
#include "l1cent/geodesic.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace l1cent {

struct LayoutConfiguration {
    std::vector<double> radii;  // fixed; radii[i] = -ln C(v_i)
    std::vector<double> thetas; // in [0, 2*pi)
    double stress = 0.0;
    int iterations = 0;
    double final_mag = 0.0;
    bool converged = false;
    std::vector<int> fallback_vertices; // initial directions that were undefined
};

struct MonotoneFit {
    // Fitted dissimilarities aligned to unordered pairs (i < j) in
    // lexicographic order.
    std::vector<double> fitted;
};

struct LayoutOptions {
    double initial_step = 0.2;
    double step_decay = 0.95;
    double mag_tolerance = 1e-4;
    int max_iterations = 500;
    int restarts = 0; // extra random-angle starts; best stress wins
    std::uint64_t seed = 0;
    std::function<void(const LayoutConfiguration&)> observer; // called once per iteration
};

// Number of unordered pairs and the lexicographic pair index helpers.
inline size_t pair_count(int n) { return static_cast<size_t>(n) * (n - 1) / 2; }
size_t pair_index(int i, int j, int n); // requires i < j

// r_i = -ln(C(v_i)); requires an L1-family measure with values in (0, 1].
std::vector<double> radii_from_centrality(const CentralityVector& c);

// Double-centered embedding from the two leading nonnegative eigenpairs.
std::vector<std::array<double, 2>> classical_mds(const DistanceMatrix& d);

// Projects each classical-MDS point onto its centrality circle along the
// direction from the median's point; undefined directions fall back to the
// angle 2*pi*i/n and are recorded.
LayoutConfiguration initial_configuration(const std::vector<std::array<double, 2>>& points,
                                          std::span<const double> radii, int median);

// Pairwise configuration distances for the current angles, lexicographic order.
std::vector<double> configuration_distances(const LayoutConfiguration& config);

// Least-squares monotone fit of configuration distances in the order of the
// geodesic dissimilarities; pairs with exactly equal geodesic distance are
// merged before pooling. Pool-adjacent-violators with block means recomputed
// from the original values.
MonotoneFit monotone_fit(std::span<const double> geodesic, std::span<const double> config);

// Kruskal stress sqrt(S*/T*) over unordered pairs.
double stress_value(std::span<const double> config, std::span<const double> fitted);
double stress(const LayoutConfiguration& config, const MonotoneFit& fit);

// dS/d(theta_i) with the fitted values held fixed. Requires S* > 0.
// Coincident pairs are skipped; their count is reported through
// `skipped_pairs` when given.
std::vector<double> stress_gradient(const LayoutConfiguration& config, const MonotoneFit& fit,
                                    int* skipped_pairs = nullptr);

LayoutConfiguration optimize_layout(const DistanceMatrix& d, const CentralityVector& c,
                                    const LayoutOptions& opts = {});

// SVG with one marker per vertex, the anchor median filled black, and four
// concentric quartile circles (radii -ln of the min/25%/50%/75% quantiles of
// the centrality values, linearly interpolated) labeled with those values.
std::string render_target_plot(const LayoutConfiguration& config, const CentralityVector& c,
                               std::span<const std::string> labels);

} // namespace l1cent
