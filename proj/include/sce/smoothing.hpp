#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sce/graph.hpp"
#include "sce/matrix.hpp"

namespace sce {

/// The fixed low-pass filter (D+I)^-1 (A+I) applied k times. Smoothing is
/// a pre-processing step: gradients never flow through it, so it is
/// computed once and its output cached by the trainer.
class SmoothingOperator {
public:
    SmoothingOperator(const Graph& graph, std::size_t k)
        : graph_(&graph), k_(k), inv_degrees_(graph.num_nodes()) {
        for (NodeId u = 0; u < graph.num_nodes(); ++u) {
            inv_degrees_[u] = 1.0 / static_cast<double>(graph.degree(u) + 1);
        }
    }

    const Graph& graph() const { return *graph_; }
    std::size_t depth() const { return k_; }
    const std::vector<double>& inv_degrees() const { return inv_degrees_; }

    /// One application of (D+I)^-1 (A+I): each output row is the mean of
    /// the node's own row and its neighbors' rows. The self term is added
    /// first, then neighbors in ascending id order, so results do not
    /// depend on scheduling. The final scaling divides by d+1 rather than
    /// multiplying by the cached inverse: x/x == 1 holds for every degree,
    /// so constant rows are exact fixed points (multiplying by 1/49, for
    /// one, loses the last bit).
    DenseMatrix apply_once(const DenseMatrix& f) const {
        check_rows(f);
        const std::size_t cols = f.cols();
        DenseMatrix out(f.rows(), cols);
        for (NodeId u = 0; u < graph_->num_nodes(); ++u) {
            double* dst = out.row(u);
            const double* self = f.row(u);
            for (std::size_t j = 0; j < cols; ++j) dst[j] = self[j];
            for (NodeId v : graph_->neighbors(u)) {
                const double* src = f.row(v);
                for (std::size_t j = 0; j < cols; ++j) dst[j] += src[j];
            }
            const double scale = static_cast<double>(graph_->degree(u) + 1);
            for (std::size_t j = 0; j < cols; ++j) dst[j] /= scale;
        }
        return out;
    }

    /// F^(k): the filter iterated k times; k = 0 returns F unchanged.
    DenseMatrix smooth(const DenseMatrix& f) const {
        check_rows(f);
        DenseMatrix cur = f;
        for (std::size_t i = 0; i < k_; ++i) cur = apply_once(cur);
        return cur;
    }

    /// Every intermediate level F^(1)..F^(k); each level reuses the
    /// previous, so the whole ladder costs one depth-k pass.
    std::vector<DenseMatrix> smooth_all_scales(const DenseMatrix& f) const {
        if (k_ == 0) {
            throw std::invalid_argument("smooth_all_scales: k must be >= 1");
        }
        check_rows(f);
        std::vector<DenseMatrix> levels;
        levels.reserve(k_);
        levels.push_back(apply_once(f));
        for (std::size_t i = 1; i < k_; ++i) {
            levels.push_back(apply_once(levels.back()));
        }
        return levels;
    }

private:
    void check_rows(const DenseMatrix& f) const {
        if (f.rows() != graph_->num_nodes()) {
            throw std::invalid_argument(
                "smoothing: feature matrix has " + std::to_string(f.rows()) +
                " rows, graph has n=" + std::to_string(graph_->num_nodes()));
        }
    }

    const Graph* graph_;
    std::size_t k_;
    std::vector<double> inv_degrees_;
};

}  // namespace sce
