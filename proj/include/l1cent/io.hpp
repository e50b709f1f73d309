// io.hpp - output serialization (TSV tables, DOT digraphs, Lorenz SVG) and
// loaders for the two published example networks.

#pragma once

#include "l1cent/graph.hpp"
#include "l1cent/geodesic.hpp"
#include "l1cent/heterogeneity.hpp"
#include "l1cent/local.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace l1cent::io {

// "%.6f" by default; 17 significant digits when full = true.
std::string format_number(double v, bool full);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> trailing_comments; // emitted after the rows, '#'-prefixed
};

std::string to_tsv(const Table& table);

std::string distance_tsv(const DistanceMatrix& d, const std::vector<std::string>& labels,
                         bool full_precision);

// Directed DOT graph of the multiscale arcs; local medians get a larger size.
std::string dot_digraph(const std::vector<std::string>& labels, const MultiscaleEdges& edges);

std::string lorenz_tsv(const LorenzCurve& curve, bool full_precision);
std::string lorenz_svg(const LorenzCurve& curve);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

enum class Dataset { Mcu, Assembly };

// Loads <dir>/mcu_edges.tsv + <dir>/mcu_vertices.tsv (multiplicity =
// worldwide gross) or <dir>/assembly_edges.tsv (+ optional vertex file,
// multiplicities 1). Refuses graphs whose vertex/edge counts differ from the
// published sizes.
Graph load_dataset(Dataset which, const std::filesystem::path& dir);

} // namespace l1cent::io
