#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sce/matrix.hpp"

namespace sce {

using NodeId = std::uint32_t;

/// Immutable undirected simple graph in compressed sparse row form.
/// Neighbor lists are sorted ascending and free of self-loops and
/// duplicates; the Laplacian D - A is never materialized.
class Graph {
public:
    Graph() = default;

    /// Build from an undirected edge list. Duplicate edges (in either
    /// orientation) collapse to one and self-loops are dropped.
    Graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges)
        : n_(n) {
        std::vector<std::vector<NodeId>> adj(n);
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                throw std::out_of_range(
                    "Graph: edge (" + std::to_string(u) + ", " +
                    std::to_string(v) + ") references a node id >= n=" +
                    std::to_string(n));
            }
            if (u == v) continue;
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        offsets_.resize(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto& nb = adj[i];
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            offsets_[i + 1] = offsets_[i] + nb.size();
        }
        neighbors_.resize(offsets_[n]);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (NodeId v : adj[i]) neighbors_[pos++] = v;
        }
        m_ = neighbors_.size() / 2;
    }

    std::size_t num_nodes() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::size_t degree(NodeId u) const {
        return offsets_[u + 1] - offsets_[u];
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {neighbors_.data() + offsets_[u], degree(u)};
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ &&
               neighbors_ == other.neighbors_;
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbors_;
};

struct EdgeListResult {
    Graph graph;
    std::size_t skipped_self_loops = 0;
};

/// Parse a whitespace-separated edge list. Lines starting with '#' are
/// comments; an optional `# nodes=N` header fixes the node count, which
/// otherwise defaults to max id + 1. Self-loop lines are skipped and
/// counted; duplicate lines (including reversed ones) collapse.
inline EdgeListResult load_edge_list(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t skipped = 0;
    bool have_header = false;
    std::size_t header_n = 0;
    std::uint64_t max_id = 0;
    bool any_node = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::string body = line.substr(first + 1);
            std::size_t eq = body.find('=');
            if (eq != std::string::npos) {
                std::string key = body.substr(0, eq);
                key.erase(std::remove_if(key.begin(), key.end(),
                                         [](unsigned char c) {
                                             return c == ' ' || c == '\t';
                                         }),
                          key.end());
                if (key == "nodes") {
                    std::istringstream val(body.substr(eq + 1));
                    long long n = -1;
                    val >> n;
                    if (n < 0) {
                        throw std::runtime_error(
                            "edge list line " + std::to_string(line_no) +
                            ": bad nodes header");
                    }
                    have_header = true;
                    header_n = static_cast<std::size_t>(n);
                }
            }
            continue;
        }
        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            throw std::runtime_error("edge list line " +
                                     std::to_string(line_no) +
                                     ": expected two non-negative integers");
        }
        std::string extra;
        if (ls >> extra) {
            throw std::runtime_error("edge list line " +
                                     std::to_string(line_no) +
                                     ": trailing tokens after edge");
        }
        any_node = true;
        max_id = std::max<std::uint64_t>(max_id, static_cast<std::uint64_t>(u));
        max_id = std::max<std::uint64_t>(max_id, static_cast<std::uint64_t>(v));
        if (u == v) {
            ++skipped;
            continue;
        }
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }

    std::size_t n = any_node ? static_cast<std::size_t>(max_id) + 1 : 0;
    if (have_header) {
        if (any_node && header_n < max_id + 1) {
            throw std::runtime_error(
                "edge list: header nodes=" + std::to_string(header_n) +
                " is smaller than max node id " + std::to_string(max_id));
        }
        n = header_n;
    }
    return {Graph(n, edges), skipped};
}

/// Eq-style smoothness measure: sum over edges of (x_i - x_j)^2, i.e. the
/// Laplacian quadratic form x^T (D - A) x computed edge by edge.
inline double laplacian_quadratic(const Graph& g, std::span<const double> x) {
    if (x.size() != g.num_nodes()) {
        throw std::invalid_argument(
            "laplacian_quadratic: vector length " + std::to_string(x.size()) +
            " != n=" + std::to_string(g.num_nodes()));
    }
    double total = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;  // each undirected edge once
            const double d = x[u] - x[v];
            total += d * d;
        }
    }
    return total;
}

inline double laplacian_quadratic(const Graph& g,
                                  const std::vector<double>& x) {
    return laplacian_quadratic(g, std::span<const double>(x));
}

/// Multi-column form: sum over edges of ||X_i - X_j||^2 = Tr(X^T L X).
inline double laplacian_quadratic(const Graph& g, const DenseMatrix& x) {
    if (x.rows() != g.num_nodes()) {
        throw std::invalid_argument(
            "laplacian_quadratic: matrix has " + std::to_string(x.rows()) +
            " rows, graph has n=" + std::to_string(g.num_nodes()));
    }
    double total = 0.0;
    const std::size_t d = x.cols();
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const double* xu = x.row(u);
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            const double* xv = x.row(v);
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double diff = xu[j] - xv[j];
                s += diff * diff;
            }
            total += s;
        }
    }
    return total;
}

/// |E(S, complement)| for a subset given as node ids. Equals the quadratic
/// form on the 0/1 indicator exactly, counted in integers.
inline std::uint64_t cut_size(const Graph& g,
                              std::span<const NodeId> subset) {
    std::vector<bool> in_s(g.num_nodes(), false);
    for (NodeId u : subset) {
        if (u >= g.num_nodes()) {
            throw std::out_of_range("cut_size: node id " + std::to_string(u) +
                                    " >= n=" + std::to_string(g.num_nodes()));
        }
        in_s[u] = true;
    }
    std::uint64_t crossing = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (!in_s[u]) continue;
        for (NodeId v : g.neighbors(u)) {
            if (!in_s[v]) ++crossing;
        }
    }
    return crossing;
}

inline std::uint64_t cut_size(const Graph& g,
                              const std::vector<NodeId>& subset) {
    return cut_size(g, std::span<const NodeId>(subset));
}

}  // namespace sce
