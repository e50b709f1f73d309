#include "l1cent/io.hpp"
#include "l1cent/error.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace l1cent::io {

std::string format_number(double v, bool full) {
    char buf[64];
    if (full)
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    else
        std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string to_tsv(const Table& table) {
    std::string out;
    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += '\t';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    for (const auto& comment : table.trailing_comments) {
        out += "# ";
        out += comment;
        out += '\n';
    }
    return out;
}

std::string distance_tsv(const DistanceMatrix& d, const std::vector<std::string>& labels,
                         bool full_precision) {
    Table table;
    table.header.push_back("label");
    for (const auto& l : labels) table.header.push_back(l);
    for (int i = 0; i < d.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(labels[static_cast<size_t>(i)]);
        for (int j = 0; j < d.size(); ++j)
            row.push_back(format_number(d(i, j), full_precision));
        table.rows.push_back(std::move(row));
    }
    return to_tsv(table);
}

namespace {

bool is_plain_dot_id(const std::string& label) {
    if (label.empty()) return false;
    if (std::isdigit(static_cast<unsigned char>(label.front()))) {
        for (char c : label)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }
    for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::string dot_id(const std::string& label) {
    if (is_plain_dot_id(label)) return label;
    std::string quoted = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string dot_digraph(const std::vector<std::string>& labels, const MultiscaleEdges& edges) {
    std::string out = "digraph locality {\n";
    char alpha[64];
    std::snprintf(alpha, sizeof(alpha), "%.6g", edges.alpha);
    out += "  // locality level alpha = ";
    out += alpha;
    out += "\n  node [shape=circle, width=0.30, fixedsize=true];\n";
    std::set<int> medians(edges.local_medians.begin(), edges.local_medians.end());
    for (int m : edges.local_medians)
        out += "  " + dot_id(labels[static_cast<size_t>(m)]) + " [width=0.55];\n";
    for (auto [from, to] : edges.arcs)
        out += "  " + dot_id(labels[static_cast<size_t>(from)]) + " -> " +
               dot_id(labels[static_cast<size_t>(to)]) + ";\n";
    out += "}\n";
    return out;
}

std::string lorenz_tsv(const LorenzCurve& curve, bool full_precision) {
    Table table;
    table.header = {"p", "L"};
    const size_t m = curve.knots.size() - 1;
    for (size_t k = 0; k < curve.knots.size(); ++k) {
        double p = static_cast<double>(k) / static_cast<double>(m);
        table.rows.push_back({format_number(p, full_precision),
                              format_number(curve.knots[k], full_precision)});
    }
    table.trailing_comments.push_back("gini\t" + format_number(curve.gini, full_precision));
    return to_tsv(table);
}

std::string lorenz_svg(const LorenzCurve& curve) {
    const double size = 480.0, margin = 40.0, span = size - 2.0 * margin;
    auto px = [&](double p) { return margin + span * p; };
    auto py = [&](double v) { return size - margin - span * v; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    const size_t m = curve.knots.size() - 1;
    std::string curve_points, gap_points;
    for (size_t k = 0; k < curve.knots.size(); ++k) {
        double p = static_cast<double>(k) / static_cast<double>(m);
        curve_points += fmt(px(p)) + "," + fmt(py(curve.knots[k])) + " ";
    }
    // Shaded region between the diagonal and the curve.
    gap_points = fmt(px(0)) + "," + fmt(py(0)) + " " + fmt(px(1)) + "," + fmt(py(1)) + " ";
    for (size_t k = curve.knots.size(); k-- > 0;) {
        double p = static_cast<double>(k) / static_cast<double>(m);
        gap_points += fmt(px(p)) + "," + fmt(py(curve.knots[k])) + " ";
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "  <polygon points=\"" + gap_points + "\" fill=\"#d0e2f0\" stroke=\"none\"/>\n";
    svg += "  <line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(1)) +
           "\" y2=\"" + fmt(py(1)) + "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
    svg += "  <polyline points=\"" + curve_points +
           "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
    char gini_text[64];
    std::snprintf(gini_text, sizeof(gini_text), "G = %.4f", curve.gini);
    svg += "  <text x=\"" + fmt(px(0.6)) + "\" y=\"" + fmt(py(0.2)) +
           "\" font-size=\"16\">" + gini_text + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw input_error("write failed for '" + path.string() + "'");
}

Graph load_dataset(Dataset which, const std::filesystem::path& dir) {
    const char* stem = which == Dataset::Mcu ? "mcu" : "assembly";
    const int expected_vertices = which == Dataset::Mcu ? 32 : 317;
    const int expected_edges = which == Dataset::Mcu ? 278 : 47657;

    auto edge_path = dir / (std::string(stem) + "_edges.tsv");
    auto vertex_path = dir / (std::string(stem) + "_vertices.tsv");
    if (!std::filesystem::exists(edge_path))
        throw input_error("dataset file '" + edge_path.string() +
                          "' not found; export the network to TSV first (see README, "
                          "\"Example data sets\")");

    std::string edge_text = read_file(edge_path);
    std::optional<std::string> vertex_text;
    if (std::filesystem::exists(vertex_path)) vertex_text = read_file(vertex_path);
    if (which == Dataset::Mcu && !vertex_text)
        throw input_error("dataset file '" + vertex_path.string() +
                          "' not found; the movie network needs gross multiplicities");

    Graph g = vertex_text ? parse_graph(edge_text, *vertex_text) : parse_graph(edge_text);
    if (g.size() != expected_vertices || g.edge_count() != expected_edges)
        throw input_error("dataset '" + std::string(stem) + "' size mismatch: expected " +
                          std::to_string(expected_vertices) + " vertices / " +
                          std::to_string(expected_edges) + " edges, got " +
                          std::to_string(g.size()) + " / " + std::to_string(g.edge_count()));
    return g;
}

} // namespace l1cent::io
