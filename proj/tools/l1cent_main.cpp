// l1cent_main.cpp - command-line surface: every subcommand is a thin
// composition of library operations.

#include "l1cent/centrality.hpp"
#include "l1cent/error.hpp"
#include "l1cent/geodesic.hpp"
#include "l1cent/graph.hpp"
#include "l1cent/heterogeneity.hpp"
#include "l1cent/io.hpp"
#include "l1cent/layout.hpp"
#include "l1cent/local.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace l1cent;

struct CommonOptions {
    std::string graph_path;
    std::string vertex_path;
    std::string dataset;
    std::string data_dir = "data";
    std::string component = "require"; // or "largest"
    std::string precision = "6";
    std::string dump_dist;
    std::string out_path;
    int threads = 0;
    std::uint64_t seed = 0;

    bool full_precision() const { return precision == "full"; }
};

void add_common(CLI::App* sub, CommonOptions& opts, bool needs_graph = true) {
    if (needs_graph) {
        sub->add_option("-g,--graph", opts.graph_path, "edge list TSV: u<TAB>v[<TAB>weight]");
        sub->add_option("-v,--vertices", opts.vertex_path,
                        "vertex TSV: label[<TAB>multiplicity]");
        sub->add_option("--dataset", opts.dataset, "named data set: mcu or assembly")
            ->check(CLI::IsMember({"mcu", "assembly"}));
        sub->add_option("--data-dir", opts.data_dir, "directory holding data set exports");
        sub->add_option("--component", opts.component,
                        "'require' rejects disconnected input, 'largest' keeps the largest "
                        "connected component")
            ->check(CLI::IsMember({"require", "largest"}));
        sub->add_option("--dump-dist", opts.dump_dist,
                        "write the geodesic distance matrix to this TSV path");
    }
    sub->add_option("--threads", opts.threads, "worker threads (0 = library default)");
    sub->add_option("--precision", opts.precision,
                    "table precision: '6' decimal places or 'full' (17 significant digits)")
        ->check(CLI::IsMember({"6", "full"}));
    sub->add_option("--seed", opts.seed, "seed for randomized options (default 0)");
    sub->add_option("-o,--out", opts.out_path, "output path (default: stdout)");
}

void apply_threads(const CommonOptions& opts) {
#ifdef _OPENMP
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
#else
    (void)opts;
#endif
}

Graph load_graph(const CommonOptions& opts) {
    std::optional<Graph> g;
    if (!opts.dataset.empty()) {
        g = io::load_dataset(opts.dataset == "mcu" ? io::Dataset::Mcu : io::Dataset::Assembly,
                             opts.data_dir);
    } else {
        if (opts.graph_path.empty())
            throw input_error("an input graph is required (-g/--graph or --dataset)");
        std::string edge_text = io::read_file(opts.graph_path);
        if (!opts.vertex_path.empty()) {
            std::string vertex_text = io::read_file(opts.vertex_path);
            g = parse_graph(edge_text, vertex_text);
        } else {
            g = parse_graph(edge_text);
        }
    }
    if (opts.component == "largest") return largest_component(*g);
    return *g;
}

DistanceMatrix distances(const Graph& g, const CommonOptions& opts) {
    DistanceMatrix d = geodesic_matrix(g);
    if (!opts.dump_dist.empty())
        io::write_file(opts.dump_dist, io::distance_tsv(d, g.labels(), opts.full_precision()));
    return d;
}

void emit(const CommonOptions& opts, const std::string& content) {
    if (opts.out_path.empty())
        std::cout << content;
    else
        io::write_file(opts.out_path, content);
}

std::string format_alpha(double a) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", a);
    return buf;
}

std::vector<double> read_value_column(const std::string& path) {
    std::string text = io::read_file(path);
    std::vector<double> values;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            size_t used = 0;
            double v = std::stod(line, &used);
            while (used < line.size() && (line[used] == ' ' || line[used] == '\t')) ++used;
            if (used != line.size()) throw std::invalid_argument("trailing junk");
            values.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("expected one numeric value per line", line_no);
        }
    }
    return values;
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_centrality(const CommonOptions& opts, const std::vector<std::string>& measures,
                    bool margin) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    io::Table table;
    table.header.push_back("label");
    std::vector<std::vector<double>> columns;
    for (const auto& m : measures) {
        table.header.push_back(m);
        if (m == "l1")
            columns.push_back(l1_centrality(d, g.multiplicities()).values);
        else if (m == "degree")
            columns.push_back(degree_centrality(g).values);
        else if (m == "closeness")
            columns.push_back(closeness_centrality(d).values);
        else if (m == "betweenness")
            columns.push_back(betweenness_centrality(d, g).values);
        else
            throw input_error("unknown measure '" + m + "'");
    }
    if (margin)
        for (auto& col : columns) col = uniform_margin(col);
    for (int i = 0; i < g.size(); ++i) {
        std::vector<std::string> row{g.label(i)};
        for (const auto& col : columns)
            row.push_back(io::format_number(col[static_cast<size_t>(i)], opts.full_precision()));
        table.rows.push_back(std::move(row));
    }
    emit(opts, io::to_tsv(table));
}

void run_median(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    MedianSet med = graph_median(d, g.multiplicities());
    io::Table table;
    table.header = {"label", "objective"};
    for (int i : med.indices)
        table.rows.push_back(
            {g.label(i), io::format_number(med.objective, opts.full_precision())});
    emit(opts, io::to_tsv(table));
}

void run_neighborhood(const CommonOptions& opts, const std::string& focal, double alpha) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    auto idx = g.index_of(focal);
    if (!idx) throw input_error("unknown focal vertex '" + focal + "'");
    NeighborhoodSet nb = neighborhood(d, g.multiplicities(), *idx, alpha);
    std::vector<char> member(static_cast<size_t>(g.size()), 0);
    for (int v : nb.members) member[static_cast<size_t>(v)] = 1;
    io::Table table;
    table.header = {"label", "symmetrized", "member"};
    for (int i = 0; i < g.size(); ++i)
        table.rows.push_back({g.label(i),
                              io::format_number(nb.symmetrized_scores[static_cast<size_t>(i)],
                                                opts.full_precision()),
                              member[static_cast<size_t>(i)] ? "1" : "0"});
    emit(opts, io::to_tsv(table));
}

void run_local(const CommonOptions& opts, const std::vector<double>& alphas) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    io::Table table;
    table.header.push_back("label");
    std::vector<std::vector<double>> columns;
    for (double a : alphas) {
        table.header.push_back("l1(a=" + format_alpha(a) + ")");
        columns.push_back(local_l1_centrality(d, g.multiplicities(), a).values);
    }
    for (int i = 0; i < g.size(); ++i) {
        std::vector<std::string> row{g.label(i)};
        for (const auto& col : columns)
            row.push_back(io::format_number(col[static_cast<size_t>(i)], opts.full_precision()));
        table.rows.push_back(std::move(row));
    }
    emit(opts, io::to_tsv(table));
}

void run_edges(const CommonOptions& opts, double alpha) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    MultiscaleEdges edges = multiscale_edges(d, g.multiplicities(), alpha);
    emit(opts, io::dot_digraph(g.labels(), edges));
}

void run_profile(const CommonOptions& opts, const std::string& grid_spec) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    std::vector<double> grid;
    if (grid_spec == "auto") {
        grid = default_alpha_grid(g.size());
        if (grid.empty())
            throw input_error("auto grid is empty for n = " + std::to_string(g.size()) +
                              "; pass an explicit --grid");
    } else {
        std::istringstream in(grid_spec);
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty()) grid.push_back(std::stod(item));
    }
    CentralityProfile profile = centrality_profile(d, g.multiplicities(), grid);
    io::Table table;
    table.header.push_back("label");
    for (double a : profile.alphas) table.header.push_back("a=" + format_alpha(a));
    for (int i = 0; i < g.size(); ++i) {
        std::vector<std::string> row{g.label(i)};
        for (size_t c = 0; c < profile.alphas.size(); ++c)
            row.push_back(
                io::format_number(profile.at(i, static_cast<int>(c)), opts.full_precision()));
        table.rows.push_back(std::move(row));
    }
    emit(opts, io::to_tsv(table));
}

void run_lorenz(const CommonOptions& opts, const std::string& values_path, double alpha,
                const std::string& svg_path) {
    std::vector<double> values;
    if (!values_path.empty()) {
        values = read_value_column(values_path);
    } else {
        Graph g = load_graph(opts);
        DistanceMatrix d = distances(g, opts);
        values = alpha < 1.0 ? local_l1_centrality(d, g.multiplicities(), alpha).values
                             : l1_centrality(d, g.multiplicities()).values;
    }
    LorenzCurve curve = lorenz(values);
    if (!svg_path.empty()) io::write_file(svg_path, io::lorenz_svg(curve));
    emit(opts, io::lorenz_tsv(curve, opts.full_precision()));
}

void run_target_plot(const CommonOptions& opts, const std::string& coords_path, int restarts,
                     bool force) {
    Graph g = load_graph(opts);
    const auto& eta = g.multiplicities();
    bool uniform = true;
    for (double e : eta)
        if (e != eta.front()) uniform = false;
    if (!uniform && !force)
        throw input_error("target plots assume uniform multiplicities; pass --force to "
                          "lay out a vertex-weighted graph anyway");
    DistanceMatrix d = distances(g, opts);
    CentralityVector c = l1_centrality(d, eta);
    LayoutOptions layout_opts;
    layout_opts.restarts = restarts;
    layout_opts.seed = opts.seed;
    LayoutConfiguration config = optimize_layout(d, c, layout_opts);

    if (!coords_path.empty()) {
        std::string tsv = "# stress = " + io::format_number(config.stress, true) + "\n";
        io::Table table;
        table.header = {"label", "r", "theta", "x", "y"};
        for (int i = 0; i < g.size(); ++i) {
            double r = config.radii[static_cast<size_t>(i)];
            double t = config.thetas[static_cast<size_t>(i)];
            table.rows.push_back({g.label(i), io::format_number(r, opts.full_precision()),
                                  io::format_number(t, opts.full_precision()),
                                  io::format_number(r * std::cos(t), opts.full_precision()),
                                  io::format_number(r * std::sin(t), opts.full_precision())});
        }
        io::write_file(coords_path, tsv + io::to_tsv(table));
    }
    emit(opts, render_target_plot(config, c, g.labels()));
}

void run_compare(const CommonOptions& opts) {
    Graph g = load_graph(opts);
    DistanceMatrix d = distances(g, opts);
    std::vector<std::vector<double>> raw = {
        l1_centrality(d, g.multiplicities()).values,
        degree_centrality(g).values,
        closeness_centrality(d).values,
        betweenness_centrality(d, g).values,
    };
    const char* names[4] = {"l1", "degree", "closeness", "betweenness"};
    io::Table table;
    table.header.push_back("label");
    for (const char* n : names) table.header.push_back(n);
    for (const char* n : names) table.header.push_back(std::string(n) + "_margin");
    std::vector<std::vector<double>> margins;
    for (const auto& col : raw) margins.push_back(uniform_margin(col));
    for (int i = 0; i < g.size(); ++i) {
        std::vector<std::string> row{g.label(i)};
        for (const auto& col : raw)
            row.push_back(io::format_number(col[static_cast<size_t>(i)], opts.full_precision()));
        for (const auto& col : margins)
            row.push_back(io::format_number(col[static_cast<size_t>(i)], opts.full_precision()));
        table.rows.push_back(std::move(row));
    }
    for (int m = 1; m < 4; ++m) {
        table.trailing_comments.push_back(
            std::string("pearson l1:") + names[m] + "\t" +
            io::format_number(pearson(raw[0], raw[static_cast<size_t>(m)]),
                              opts.full_precision()));
        table.trailing_comments.push_back(
            std::string("spearman l1:") + names[m] + "\t" +
            io::format_number(spearman(raw[0], raw[static_cast<size_t>(m)]),
                              opts.full_precision()));
    }
    emit(opts, io::to_tsv(table));
}

void run_depth_check(const CommonOptions& opts, const std::string& points_path,
                     const std::string& mult_path, int focal) {
    std::string text = io::read_file(points_path);
    std::vector<std::vector<double>> points;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, '\t')) {
            try {
                row.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw parse_error("expected tab-separated coordinates", line_no);
            }
        }
        if (row.empty()) throw parse_error("empty point row", line_no);
        points.push_back(std::move(row));
    }
    std::vector<double> eta(points.size(), 1.0);
    if (!mult_path.empty()) {
        eta = read_value_column(mult_path);
        if (eta.size() != points.size())
            throw input_error("multiplicity count does not match point count");
    }
    if (focal < 0 || focal >= static_cast<int>(points.size()))
        throw input_error("focal index out of range");
    DepthCheck result = euclidean_depth_check(points, eta, focal);
    io::Table table;
    table.header = {"lhs", "depth"};
    table.rows.push_back({io::format_number(result.lhs, opts.full_precision()),
                          io::format_number(result.depth, opts.full_precision())});
    emit(opts, io::to_tsv(table));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "l1cent - multiplicity-aware graph centrality, local/multiscale analysis, "
        "heterogeneity indices, and target-plot layouts for undirected connected graphs"};
    app.require_subcommand(1);
    app.footer(
        "Numerical tolerances (fixed):\n"
        "  median objective ties            1e-9 relative\n"
        "  betweenness geodesic-length ties 1e-9 relative\n"
        "  per-source vs all-pairs geodesic 1e-12 relative\n"
        "  centrality bisection oracle      1e-10 on the multiplicity increment\n"
        "  layout convergence               relative gradient magnitude < 1e-4,\n"
        "                                   at most 500 iterations\n"
        "Outputs are deterministic: byte-identical across runs and --threads values.");

    CommonOptions opts;

    auto* centrality_cmd =
        app.add_subcommand("centrality", "per-vertex centrality table (TSV)");
    std::vector<std::string> measures = {"l1", "degree", "closeness", "betweenness"};
    bool margin = false;
    centrality_cmd->add_option("--measures", measures, "columns to emit")->delimiter(',');
    centrality_cmd->add_flag("--uniform-margin", margin,
                             "rank-transform each column to k/n (ties averaged)");
    add_common(centrality_cmd, opts);
    centrality_cmd->callback([&] {
        apply_threads(opts);
        run_centrality(opts, measures, margin);
    });

    auto* median_cmd = app.add_subcommand("median", "graph median vertices (TSV)");
    add_common(median_cmd, opts);
    median_cmd->callback([&] {
        apply_threads(opts);
        run_median(opts);
    });

    auto* nb_cmd = app.add_subcommand("neighborhood",
                                      "centrality-based neighborhood of a focal vertex");
    std::string focal_label;
    double nb_alpha = 1.0;
    nb_cmd->add_option("--focal", focal_label, "focal vertex label")->required();
    nb_cmd->add_option("--alpha", nb_alpha, "locality level in (0,1]")->required();
    add_common(nb_cmd, opts);
    nb_cmd->callback([&] {
        apply_threads(opts);
        run_neighborhood(opts, focal_label, nb_alpha);
    });

    auto* local_cmd = app.add_subcommand("local", "local centrality at one or more levels");
    std::vector<double> local_alphas;
    local_cmd->add_option("--alpha", local_alphas, "locality levels in (0,1]")
        ->required()
        ->delimiter(',');
    add_common(local_cmd, opts);
    local_cmd->callback([&] {
        apply_threads(opts);
        run_local(opts, local_alphas);
    });

    auto* edges_cmd =
        app.add_subcommand("edges", "multiscale edge representation (DOT digraph)");
    double edges_alpha = 1.0;
    edges_cmd->add_option("--alpha", edges_alpha, "locality level in (0,1]")->required();
    add_common(edges_cmd, opts);
    edges_cmd->callback([&] {
        apply_threads(opts);
        run_edges(opts, edges_alpha);
    });

    auto* profile_cmd = app.add_subcommand(
        "profile", "centrality profile matrix over a locality grid (uniform margin, centered)");
    std::string grid_spec = "auto";
    profile_cmd->add_option("--grid", grid_spec,
                            "'auto' ({5/n, 10/n, ...}) or a comma-separated alpha list");
    add_common(profile_cmd, opts);
    profile_cmd->callback([&] {
        apply_threads(opts);
        run_profile(opts, grid_spec);
    });

    auto* lorenz_cmd = app.add_subcommand("lorenz", "Lorenz curve knots and Gini coefficient");
    std::string values_path, svg_path;
    double lorenz_alpha = 1.0;
    lorenz_cmd->add_option("--values", values_path,
                           "read raw values (one per line) instead of computing centralities");
    lorenz_cmd->add_option("--alpha", lorenz_alpha,
                           "use local centrality at this level (default: global)");
    lorenz_cmd->add_option("--svg", svg_path, "also render the curve to this SVG path");
    add_common(lorenz_cmd, opts);
    lorenz_cmd->callback([&] {
        apply_threads(opts);
        run_lorenz(opts, values_path, lorenz_alpha, svg_path);
    });

    auto* plot_cmd = app.add_subcommand("target-plot",
                                        "radially constrained layout rendered as SVG");
    std::string coords_path;
    int restarts = 0;
    bool force = false;
    plot_cmd->add_option("--coords", coords_path, "also write polar coordinates to this TSV");
    plot_cmd->add_option("--restarts", restarts, "random-angle restarts; best stress wins");
    plot_cmd->add_flag("--force", force, "allow non-uniform multiplicities");
    add_common(plot_cmd, opts);
    plot_cmd->callback([&] {
        apply_threads(opts);
        run_target_plot(opts, coords_path, restarts, force);
    });

    auto* compare_cmd = app.add_subcommand(
        "compare", "all measures raw and uniform-margin, with correlation summary");
    add_common(compare_cmd, opts);
    compare_cmd->callback([&] {
        apply_threads(opts);
        run_compare(opts);
    });

    auto* depth_cmd = app.add_subcommand(
        "depth-check", "Euclidean-norm depth consistency check on a point cloud");
    std::string points_path, mult_path;
    int focal_index = 0;
    depth_cmd->add_option("--points", points_path, "TSV of point coordinates, one row each")
        ->required();
    depth_cmd->add_option("--multiplicities", mult_path, "one multiplicity per line");
    depth_cmd->add_option("--focal", focal_index, "0-based row index of the focal point");
    add_common(depth_cmd, opts, /*needs_graph=*/false);
    depth_cmd->callback([&] {
        apply_threads(opts);
        run_depth_check(opts, points_path, mult_path, focal_index);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
