#include "l1cent/graph.hpp"
#include "l1cent/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace l1cent {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

double parse_number(std::string_view field, const char* what, int line_no) {
    std::string buf(field);
    char* end = nullptr;
    double value = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str() || *end != '\0')
        throw parse_error(std::string("malformed ") + what + " '" + buf + "'", line_no);
    if (!std::isfinite(value))
        throw parse_error(std::string(what) + " must be finite, got '" + buf + "'", line_no);
    return value;
}

// Strips a trailing '\r' so CRLF files parse the same as LF files.
std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

template <typename F>
void for_each_line(std::string_view text, F&& fn) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        ++line_no;
        line = chomp(line);
        if (!line.empty() && line.front() != '#') fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::string fmt_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<double> multiplicities,
             std::vector<Edge> edges)
    : labels_(std::move(labels)), multiplicities_(std::move(multiplicities)),
      edges_(std::move(edges)) {
    const int n = size();
    if (n == 0) throw input_error("graph has no vertices");
    if (multiplicities_.size() != labels_.size())
        throw input_error("label/multiplicity count mismatch");

    std::set<std::string_view> seen_labels;
    for (const auto& l : labels_)
        if (!seen_labels.insert(l).second)
            throw input_error("duplicate vertex label '" + l + "'");

    total_multiplicity_ = 0.0;
    for (double m : multiplicities_) {
        if (!std::isfinite(m) || m < 0.0)
            throw input_error("multiplicity must be finite and >= 0");
        total_multiplicity_ += m;
    }
    if (!(total_multiplicity_ > 0.0))
        throw input_error("total multiplicity must be positive");

    adjacency_.assign(static_cast<size_t>(n), {});
    std::set<std::pair<int, int>> seen_pairs;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw input_error("edge endpoint out of range");
        if (e.u == e.v)
            throw input_error("self-loop at vertex '" + labels_[static_cast<size_t>(e.u)] + "'");
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw input_error("edge weight must be finite and > 0");
        auto key = std::minmax(e.u, e.v);
        if (!seen_pairs.insert(key).second)
            throw input_error("duplicate edge between '" + labels_[static_cast<size_t>(e.u)] +
                              "' and '" + labels_[static_cast<size_t>(e.v)] + "'");
        adjacency_[static_cast<size_t>(e.u)].emplace_back(e.v, e.weight);
        adjacency_[static_cast<size_t>(e.v)].emplace_back(e.u, e.weight);
    }
}

std::optional<int> Graph::index_of(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Graph parse_graph(std::string_view edge_text, std::optional<std::string_view> vertex_text) {
    std::vector<std::string> labels;
    std::vector<double> multiplicities;
    std::unordered_map<std::string, int> index;
    const bool fixed_vertex_set = vertex_text.has_value();

    if (fixed_vertex_set) {
        for_each_line(*vertex_text, [&](std::string_view line, int line_no) {
            auto fields = split_fields(line);
            if (fields.empty() || fields.size() > 2 || fields[0].empty())
                throw parse_error("expected 'label<TAB>multiplicity'", line_no);
            double mult = 1.0;
            if (fields.size() == 2) {
                mult = parse_number(fields[1], "multiplicity", line_no);
                if (mult < 0.0)
                    throw parse_error("negative multiplicity '" + std::string(fields[1]) + "'",
                                      line_no);
            }
            std::string label(fields[0]);
            if (index.count(label))
                throw parse_error("duplicate vertex label '" + label + "'", line_no);
            index.emplace(label, static_cast<int>(labels.size()));
            labels.push_back(std::move(label));
            multiplicities.push_back(mult);
        });
        if (labels.empty()) throw input_error("vertex file defines no vertices");
    }

    auto vertex_id = [&](std::string_view label, int line_no) -> int {
        auto it = index.find(std::string(label));
        if (it != index.end()) return it->second;
        if (fixed_vertex_set)
            throw parse_error("unknown vertex label '" + std::string(label) + "'", line_no);
        int id = static_cast<int>(labels.size());
        index.emplace(std::string(label), id);
        labels.emplace_back(label);
        multiplicities.push_back(1.0);
        return id;
    };

    std::vector<Edge> edges;
    for_each_line(edge_text, [&](std::string_view line, int line_no) {
        auto fields = split_fields(line);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty())
            throw parse_error("expected 'u<TAB>v[<TAB>weight]'", line_no);
        int u = vertex_id(fields[0], line_no);
        int v = vertex_id(fields[1], line_no);
        if (u == v) throw parse_error("self-loop at '" + std::string(fields[0]) + "'", line_no);
        double w = 1.0;
        if (fields.size() == 3) {
            w = parse_number(fields[2], "weight", line_no);
            if (w <= 0.0)
                throw parse_error("nonpositive weight '" + std::string(fields[2]) + "'", line_no);
        }
        edges.push_back(Edge{u, v, w});
    });

    if (labels.empty()) throw input_error("edge list defines no vertices");
    return Graph(std::move(labels), std::move(multiplicities), std::move(edges));
}

GraphText serialize_graph(const Graph& g) {
    GraphText out;
    for (int i = 0; i < g.size(); ++i) {
        out.vertex_text += g.label(i);
        out.vertex_text += '\t';
        out.vertex_text += fmt_exact(g.multiplicities()[static_cast<size_t>(i)]);
        out.vertex_text += '\n';
    }
    for (const Edge& e : g.edges()) {
        out.edge_text += g.label(e.u);
        out.edge_text += '\t';
        out.edge_text += g.label(e.v);
        out.edge_text += '\t';
        out.edge_text += fmt_exact(e.weight);
        out.edge_text += '\n';
    }
    return out;
}

ConnectivityReport connectivity(const Graph& g) {
    const int n = g.size();
    std::vector<int> component(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<size_t>(start)] >= 0) continue;
        int id = static_cast<int>(components.size());
        components.emplace_back();
        stack.push_back(start);
        component[static_cast<size_t>(start)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            components[static_cast<size_t>(id)].push_back(u);
            for (auto [v, w] : g.adjacency()[static_cast<size_t>(u)]) {
                (void)w;
                if (component[static_cast<size_t>(v)] < 0) {
                    component[static_cast<size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(components.back().begin(), components.back().end());
    }
    return ConnectivityReport{components.size() == 1, std::move(components)};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(static_cast<size_t>(g.size()), -1);
    std::vector<std::string> labels;
    std::vector<double> mults;
    for (int v : vertices) {
        remap[static_cast<size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
        mults.push_back(g.multiplicities()[static_cast<size_t>(v)]);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int u = remap[static_cast<size_t>(e.u)];
        int v = remap[static_cast<size_t>(e.v)];
        if (u >= 0 && v >= 0) edges.push_back(Edge{u, v, e.weight});
    }
    return Graph(std::move(labels), std::move(mults), std::move(edges));
}

Graph largest_component(const Graph& g) {
    auto report = connectivity(g);
    const std::vector<int>* best = &report.components.front();
    for (const auto& c : report.components)
        if (c.size() > best->size()) best = &c;
    return induced_subgraph(g, *best);
}

} // namespace l1cent
