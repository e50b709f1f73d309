#define EIGEN_DONT_PARALLELIZE

#include "l1cent/layout.hpp"
#include "l1cent/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace l1cent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// Linear-interpolation quantile of an ascending vector.
double interpolated_quantile(const std::vector<double>& sorted, double p) {
    const size_t m = sorted.size();
    if (m == 1) return sorted[0];
    double h = p * static_cast<double>(m - 1);
    size_t lo = static_cast<size_t>(std::floor(h));
    if (lo >= m - 1) return sorted[m - 1];
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

struct DescentResult {
    std::vector<double> thetas;
    double stress = 0.0;
    int iterations = 0;
    double final_mag = 0.0;
    bool converged = false;
};

} // namespace

size_t pair_index(int i, int j, int n) {
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

std::vector<double> radii_from_centrality(const CentralityVector& c) {
    if (c.measure != Measure::L1 && c.measure != Measure::LocalL1 &&
        c.measure != Measure::Symmetrized)
        throw input_error("radii require an L1-family centrality");
    std::vector<double> radii(c.values.size());
    for (size_t i = 0; i < c.values.size(); ++i) {
        double v = c.values[i];
        if (!(v > 0.0) || v > 1.0)
            throw input_error("centrality values must lie in (0, 1] for the radius transform");
        radii[i] = -std::log(v);
    }
    return radii;
}

std::vector<std::array<double, 2>> classical_mds(const DistanceMatrix& d) {
    const int n = d.size();
    if (n < 2) throw input_error("classical MDS needs at least two points");

    Eigen::MatrixXd sq(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sq(i, j) = d(i, j) * d(i, j);
    Eigen::MatrixXd centering =
        Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::MatrixXd b = -0.5 * centering * sq * centering;
    // Symmetrize against rounding before the eigensolve.
    b = 0.5 * (b + b.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");

    // Eigenvalues come back ascending; take the top two, clamped at zero.
    std::vector<std::array<double, 2>> points(static_cast<size_t>(n), {0.0, 0.0});
    for (int axis = 0; axis < 2; ++axis) {
        int col = n - 1 - axis;
        double lambda = std::max(solver.eigenvalues()(col), 0.0);
        double scale = std::sqrt(lambda);
        for (int i = 0; i < n; ++i)
            points[static_cast<size_t>(i)][static_cast<size_t>(axis)] =
                scale * solver.eigenvectors()(i, col);
    }
    return points;
}

LayoutConfiguration initial_configuration(const std::vector<std::array<double, 2>>& points,
                                          std::span<const double> radii, int median) {
    const int n = static_cast<int>(points.size());
    LayoutConfiguration config;
    config.radii.assign(radii.begin(), radii.end());
    config.thetas.assign(static_cast<size_t>(n), 0.0);
    const auto& center = points[static_cast<size_t>(median)];
    for (int i = 0; i < n; ++i) {
        if (i == median) continue;
        double dx = points[static_cast<size_t>(i)][0] - center[0];
        double dy = points[static_cast<size_t>(i)][1] - center[1];
        if (dx == 0.0 && dy == 0.0) {
            config.thetas[static_cast<size_t>(i)] = wrap_angle(kTwoPi * i / n);
            config.fallback_vertices.push_back(i);
        } else {
            config.thetas[static_cast<size_t>(i)] = wrap_angle(std::atan2(dy, dx));
        }
    }
    return config;
}

std::vector<double> configuration_distances(const LayoutConfiguration& config) {
    const int n = static_cast<int>(config.radii.size());
    std::vector<double> dist(pair_count(n));
    size_t p = 0;
    for (int i = 0; i < n; ++i) {
        double ri = config.radii[static_cast<size_t>(i)];
        double ti = config.thetas[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j, ++p) {
            double rj = config.radii[static_cast<size_t>(j)];
            double sq = ri * ri + rj * rj -
                        2.0 * ri * rj * std::cos(ti - config.thetas[static_cast<size_t>(j)]);
            dist[p] = std::sqrt(std::max(sq, 0.0));
        }
    }
    return dist;
}

MonotoneFit monotone_fit(std::span<const double> geodesic, std::span<const double> config) {
    if (geodesic.size() != config.size())
        throw input_error("pair arrays must have matching length");
    const size_t count = geodesic.size();

    std::vector<size_t> order(count);
    for (size_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return geodesic[a] != geodesic[b] ? geodesic[a] < geodesic[b] : a < b;
    });

    // Blocks of pair indices; exactly equal geodesic values start out merged
    // (the equality clause of the monotonicity condition).
    struct Block {
        size_t begin, end; // positions in `order`
        double mean;
    };
    std::vector<Block> blocks;
    auto block_mean = [&](size_t begin, size_t end) {
        double sum = 0.0;
        for (size_t p = begin; p < end; ++p) sum += config[order[p]];
        return sum / static_cast<double>(end - begin);
    };
    size_t pos = 0;
    while (pos < count) {
        size_t end = pos + 1;
        while (end < count && geodesic[order[end]] == geodesic[order[pos]]) ++end;
        blocks.push_back(Block{pos, end, block_mean(pos, end)});
        // Pool adjacent violators.
        while (blocks.size() > 1 && blocks[blocks.size() - 2].mean >= blocks.back().mean) {
            Block merged{blocks[blocks.size() - 2].begin, blocks.back().end, 0.0};
            merged.mean = block_mean(merged.begin, merged.end);
            blocks.pop_back();
            blocks.back() = merged;
        }
        pos = end;
    }

    MonotoneFit fit;
    fit.fitted.resize(count);
    for (const Block& b : blocks)
        for (size_t p = b.begin; p < b.end; ++p) fit.fitted[order[p]] = b.mean;
    return fit;
}

double stress_value(std::span<const double> config, std::span<const double> fitted) {
    double s_star = 0.0, t_star = 0.0;
    for (size_t p = 0; p < config.size(); ++p) {
        double r = config[p] - fitted[p];
        s_star += r * r;
        t_star += config[p] * config[p];
    }
    if (t_star == 0.0) throw numeric_error("stress undefined: all points coincide");
    return std::sqrt(s_star / t_star);
}

double stress(const LayoutConfiguration& config, const MonotoneFit& fit) {
    return stress_value(configuration_distances(config), fit.fitted);
}

std::vector<double> stress_gradient(const LayoutConfiguration& config, const MonotoneFit& fit,
                                    int* skipped_pairs) {
    const int n = static_cast<int>(config.radii.size());
    auto dist = configuration_distances(config);
    double s_star = 0.0, t_star = 0.0;
    for (size_t p = 0; p < dist.size(); ++p) {
        double r = dist[p] - fit.fitted[p];
        s_star += r * r;
        t_star += dist[p] * dist[p];
    }
    if (t_star == 0.0) throw numeric_error("stress undefined: all points coincide");
    if (s_star == 0.0) throw numeric_error("stress gradient undefined at a perfect fit");

    if (skipped_pairs) {
        int count = 0;
        for (size_t p = 0; p < dist.size(); ++p)
            if (dist[p] == 0.0) ++count;
        *skipped_pairs = count;
    }

    const double ratio = s_star / t_star;
    const double lead = std::sqrt(t_star / s_star) / t_star;
    std::vector<double> grad(static_cast<size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double ri = config.radii[static_cast<size_t>(i)];
        if (ri == 0.0) continue;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double rj = config.radii[static_cast<size_t>(j)];
            if (rj == 0.0) continue;
            size_t p = i < j ? pair_index(i, j, n) : pair_index(j, i, n);
            if (dist[p] == 0.0) continue; // coincident pair, term skipped
            double sin_term = std::sin(config.thetas[static_cast<size_t>(i)] -
                                       config.thetas[static_cast<size_t>(j)]);
            acc += ri * rj * sin_term * (1.0 - ratio - fit.fitted[p] / dist[p]);
        }
        grad[static_cast<size_t>(i)] = lead * acc;
    }
    return grad;
}

namespace {

DescentResult descend(const std::vector<double>& radii, std::vector<double> thetas,
                      std::span<const double> geodesic, const LayoutOptions& opts,
                      const std::function<void(const LayoutConfiguration&)>& observer) {
    const double radius_norm = [&] {
        double s = 0.0;
        for (double r : radii) s += r * r;
        return std::sqrt(s);
    }();

    LayoutConfiguration state;
    state.radii = radii;
    state.thetas = std::move(thetas);

    auto evaluate = [&](MonotoneFit& fit) {
        auto dist = configuration_distances(state);
        fit = monotone_fit(geodesic, dist);
        return stress_value(dist, fit.fitted);
    };

    MonotoneFit fit;
    double current = evaluate(fit);

    DescentResult best;
    best.thetas = state.thetas;
    best.stress = current;

    double step = opts.initial_step;
    int iter = 0;
    double mag = 0.0;
    bool converged = (current == 0.0);
    while (!converged && iter < opts.max_iterations) {
        auto grad = stress_gradient(state, fit);
        double norm = 0.0;
        for (double g : grad) norm += g * g;
        norm = std::sqrt(norm);
        mag = norm / radius_norm;
        if (mag < opts.mag_tolerance) {
            converged = true;
            break;
        }
        ++iter;
        for (size_t i = 0; i < state.thetas.size(); ++i)
            state.thetas[i] = wrap_angle(state.thetas[i] - step * grad[i] / mag);
        step *= opts.step_decay;
        current = evaluate(fit);
        if (current < best.stress) {
            best.stress = current;
            best.thetas = state.thetas;
        }
        if (observer) {
            state.stress = current;
            state.iterations = iter;
            state.final_mag = mag;
            observer(state);
        }
        if (current == 0.0) {
            mag = 0.0;
            converged = true;
        }
    }
    best.iterations = iter;
    best.final_mag = mag;
    best.converged = converged;
    return best;
}

} // namespace

LayoutConfiguration optimize_layout(const DistanceMatrix& d, const CentralityVector& c,
                                    const LayoutOptions& opts) {
    const int n = d.size();
    auto radii = radii_from_centrality(c);
    if (static_cast<int>(radii.size()) != n)
        throw input_error("centrality vector does not match the distance matrix");

    std::vector<double> geodesic(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) geodesic[pair_index(i, j, n)] = d(i, j);

    // Anchor: lowest-index vertex attaining the maximum centrality.
    int anchor = 0;
    for (int i = 1; i < n; ++i)
        if (c.values[static_cast<size_t>(i)] > c.values[static_cast<size_t>(anchor)]) anchor = i;

    LayoutConfiguration init = initial_configuration(classical_mds(d), radii, anchor);

    DescentResult best = descend(radii, init.thetas, geodesic, opts, opts.observer);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> thetas(static_cast<size_t>(n));
        for (double& t : thetas) t = angle(rng);
        thetas[static_cast<size_t>(anchor)] = 0.0;
        DescentResult candidate = descend(radii, std::move(thetas), geodesic, opts, nullptr);
        if (candidate.stress < best.stress) best = std::move(candidate);
    }

    LayoutConfiguration out;
    out.radii = std::move(radii);
    out.thetas = std::move(best.thetas);
    out.stress = best.stress;
    out.iterations = best.iterations;
    out.final_mag = best.final_mag;
    out.converged = best.converged;
    out.fallback_vertices = std::move(init.fallback_vertices);
    return out;
}

std::string render_target_plot(const LayoutConfiguration& config, const CentralityVector& c,
                               std::span<const std::string> labels) {
    const int n = static_cast<int>(config.radii.size());

    std::vector<double> sorted(c.values.begin(), c.values.end());
    std::sort(sorted.begin(), sorted.end());
    // Circle per centrality quantile, outermost (least central) first.
    const double levels[4] = {0.0, 0.25, 0.5, 0.75};
    double circle_r[4];
    double circle_value[4];
    for (int q = 0; q < 4; ++q) {
        circle_value[q] = interpolated_quantile(sorted, levels[q]);
        circle_r[q] = -std::log(circle_value[q]);
    }

    double extent = 1e-9;
    for (double r : config.radii) extent = std::max(extent, r);
    for (double r : circle_r) extent = std::max(extent, r);

    const double size = 640.0, margin = 40.0;
    const double scale = (size / 2.0 - margin) / extent;
    auto px = [&](double x) { return size / 2.0 + scale * x; };
    auto py = [&](double y) { return size / 2.0 - scale * y; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size, 0) + "\" height=\"" +
           fmt(size, 0) + "\" viewBox=\"0 0 " + fmt(size, 0) + " " + fmt(size, 0) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int q = 0; q < 4; ++q) {
        svg += "  <circle cx=\"" + fmt(px(0)) + "\" cy=\"" + fmt(py(0)) + "\" r=\"" +
               fmt(scale * circle_r[q]) +
               "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        svg += "  <text x=\"" + fmt(px(0) + 4.0) + "\" y=\"" +
               fmt(py(circle_r[q]) - 4.0) + "\" fill=\"red\" font-size=\"11\">" +
               fmt(circle_value[q], 4) + "</text>\n";
    }

    // Anchor median: lowest index attaining the maximum value.
    int anchor = 0;
    for (int i = 1; i < n; ++i)
        if (c.values[static_cast<size_t>(i)] > c.values[static_cast<size_t>(anchor)]) anchor = i;

    int zero_seen = 0;
    for (int i = 0; i < n; ++i) {
        double r = config.radii[static_cast<size_t>(i)];
        double x = r * std::cos(config.thetas[static_cast<size_t>(i)]);
        double y = r * std::sin(config.thetas[static_cast<size_t>(i)]);
        double cx = px(x), cy = py(y);
        if (r == 0.0 && i != anchor) {
            // Tied medians share the origin; nudge them apart by one pixel so
            // every marker stays visible. Stored coordinates are unaffected.
            ++zero_seen;
            cx += std::cos(kTwoPi * zero_seen / n);
            cy += std::sin(kTwoPi * zero_seen / n);
        }
        bool is_anchor = (i == anchor);
        svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"4\" fill=\"" +
               (is_anchor ? std::string("black") : std::string("#808080")) + "\"><title>" +
               (i < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(i)]
                                                    : std::string()) +
               "</title></circle>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace l1cent
