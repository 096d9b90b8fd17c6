#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sce/graph.hpp"
#include "sce/matrix.hpp"
#include "sce/rng.hpp"

namespace sce {

struct Dataset {
    Graph graph;
    DenseMatrix features;
    std::optional<std::vector<int>> labels;
    std::string name;
};

struct SbmResult {
    Graph graph;
    std::vector<int> labels;  // block id per node
};

/// Stochastic block model: intra-block pairs connect with p_in,
/// inter-block pairs with p_out. Labels are the block ids.
inline SbmResult gen_sbm(const std::vector<std::size_t>& block_sizes,
                         double p_in, double p_out, std::uint64_t seed) {
    if (block_sizes.size() < 2) {
        throw std::invalid_argument("gen_sbm: need at least 2 blocks");
    }
    if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0) {
        throw std::invalid_argument("gen_sbm: probabilities must be in [0, 1]");
    }
    std::size_t n = 0;
    std::vector<int> labels;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        n += block_sizes[b];
        labels.insert(labels.end(), block_sizes[b], static_cast<int>(b));
    }

    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = labels[i] == labels[j] ? p_in : p_out;
            if (p >= 1.0 || (p > 0.0 && rng.next_double() < p)) {
                edges.emplace_back(static_cast<NodeId>(i),
                                   static_cast<NodeId>(j));
            }
        }
    }
    return {Graph(n, edges), std::move(labels)};
}

/// Synthetic node features: a class-dependent one-hot pattern (repeated
/// across the width) scaled by `signal`, plus Gaussian noise.
inline DenseMatrix gen_features(const std::vector<int>& labels, std::size_t f,
                                double signal, double noise,
                                std::uint64_t seed) {
    if (f < 1) {
        throw std::invalid_argument("gen_features: f must be >= 1");
    }
    if (signal < 0.0 || noise < 0.0) {
        throw std::invalid_argument("gen_features: signal and noise must be >= 0");
    }
    int num_classes = 1;
    for (int label : labels) {
        if (label >= num_classes) num_classes = label + 1;
    }
    Rng rng(seed);
    DenseMatrix out(labels.size(), f);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        double* row = out.row(i);
        for (std::size_t j = 0; j < f; ++j) {
            double v = 0.0;
            if (labels[i] >= 0 &&
                static_cast<int>(j % num_classes) == labels[i]) {
                v = signal;
            }
            if (noise > 0.0) v += noise * rng.next_normal();
            row[j] = v;
        }
    }
    return out;
}

// Binary matrix format: magic "SCE1", u64 rows, u64 cols, then rows*cols
// little-endian IEEE doubles, row-major.
inline constexpr char kMatrixMagic[4] = {'S', 'C', 'E', '1'};

inline void write_matrix(const DenseMatrix& m, std::ostream& out) {
    out.write(kMatrixMagic, 4);
    const std::uint64_t rows = m.rows(), cols = m.cols();
    out.write(reinterpret_cast<const char*>(&rows), 8);
    out.write(reinterpret_cast<const char*>(&cols), 8);
    out.write(reinterpret_cast<const char*>(m.data()),
              static_cast<std::streamsize>(m.size() * sizeof(double)));
    if (!out) {
        throw std::runtime_error("write_matrix: write failed");
    }
}

inline void write_matrix(const DenseMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_matrix: cannot open '" + path + "'");
    }
    write_matrix(m, out);
}

inline DenseMatrix read_matrix(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMatrixMagic, 4) != 0) {
        throw std::runtime_error("read_matrix: bad magic (not an SCE1 file)");
    }
    std::uint64_t rows = 0, cols = 0;
    in.read(reinterpret_cast<char*>(&rows), 8);
    in.read(reinterpret_cast<char*>(&cols), 8);
    if (!in) {
        throw std::runtime_error("read_matrix: truncated header");
    }
    if (cols != 0 && rows > std::numeric_limits<std::uint64_t>::max() / cols) {
        throw std::runtime_error("read_matrix: dimension overflow");
    }
    const std::uint64_t count = rows * cols;
    if (count > (1ull << 32)) {
        throw std::runtime_error("read_matrix: dimension overflow");
    }
    std::vector<double> data(count);
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::uint64_t>(in.gcount()) != count * sizeof(double)) {
        throw std::runtime_error("read_matrix: truncated data section");
    }
    for (double v : data) {
        if (!std::isfinite(v)) {
            throw std::runtime_error("read_matrix: non-finite entry");
        }
    }
    return DenseMatrix(rows, cols, std::move(data));
}

inline DenseMatrix read_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_matrix: cannot open '" + path + "'");
    }
    return read_matrix(in);
}

/// Text features: one row per line, comma- or whitespace-separated.
inline DenseMatrix read_features_text(std::istream& in) {
    std::vector<double> data;
    std::size_t cols = 0, rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream ls(line);
        std::vector<double> row;
        double v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (cols == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw std::runtime_error(
                "features line " + std::to_string(line_no) + ": expected " +
                std::to_string(cols) + " values, got " +
                std::to_string(row.size()));
        }
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }
    return DenseMatrix(rows, cols, std::move(data));
}

/// Features file: SCE1 binary when the magic matches, text otherwise.
inline DenseMatrix read_features(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) {
        throw std::runtime_error("features: cannot open '" + path + "'");
    }
    char magic[4] = {0, 0, 0, 0};
    probe.read(magic, 4);
    probe.close();
    if (std::memcmp(magic, kMatrixMagic, 4) == 0) {
        return read_matrix(path);
    }
    std::ifstream in(path);
    return read_features_text(in);
}

/// Labels: one integer per line, -1 marks an unlabeled node.
inline std::vector<int> read_labels(std::istream& in) {
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long v;
        if (!(ls >> v) || v < -1) {
            throw std::runtime_error("labels line " + std::to_string(line_no) +
                                     ": expected an integer >= -1");
        }
        labels.push_back(static_cast<int>(v));
    }
    return labels;
}

inline std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("labels: cannot open '" + path + "'");
    }
    return read_labels(in);
}

inline void write_labels(const std::vector<int>& labels,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("labels: cannot open '" + path + "'");
    }
    for (int label : labels) out << label << "\n";
}

inline void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("edge list: cannot open '" + path + "'");
    }
    out << "# nodes=" << g.num_nodes() << "\n";
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v > u) out << u << " " << v << "\n";
        }
    }
}

/// Assemble a dataset from an edge list, a feature matrix and an optional
/// labels file. Row counts must agree with the graph's node count.
inline Dataset load_dataset(const std::string& graph_path,
                            const std::string& features_path,
                            const std::string& labels_path = "") {
    std::ifstream gin(graph_path);
    if (!gin) {
        throw std::runtime_error("dataset: cannot open graph '" + graph_path +
                                 "'");
    }
    Dataset ds;
    ds.graph = load_edge_list(gin).graph;
    ds.features = read_features(features_path);
    ds.name = graph_path;
    if (ds.features.rows() != ds.graph.num_nodes()) {
        throw std::runtime_error(
            "dataset: '" + features_path + "' has " +
            std::to_string(ds.features.rows()) + " rows but '" + graph_path +
            "' has " + std::to_string(ds.graph.num_nodes()) + " nodes");
    }
    if (!labels_path.empty()) {
        std::ifstream lin(labels_path);
        if (lin) {
            ds.labels = read_labels(lin);
            if (ds.labels->size() != ds.graph.num_nodes()) {
                throw std::runtime_error(
                    "dataset: '" + labels_path + "' has " +
                    std::to_string(ds.labels->size()) + " labels but '" +
                    graph_path + "' has " +
                    std::to_string(ds.graph.num_nodes()) + " nodes");
            }
        }
    }
    return ds;
}

}  // namespace sce
