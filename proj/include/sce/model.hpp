#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sce/matrix.hpp"
#include "sce/rng.hpp"

namespace sce {

enum class Aggregator { none, concat, mean, max };

inline const char* to_string(Aggregator a) {
    switch (a) {
        case Aggregator::none: return "none";
        case Aggregator::concat: return "concat";
        case Aggregator::mean: return "mean";
        case Aggregator::max: return "max";
    }
    return "?";
}

inline Aggregator aggregator_from_string(const std::string& s) {
    if (s == "none") return Aggregator::none;
    if (s == "concat") return Aggregator::concat;
    if (s == "mean") return Aggregator::mean;
    if (s == "max") return Aggregator::max;
    throw std::invalid_argument("unknown aggregator '" + s +
                                "' (expected none|concat|mean|max)");
}

/// One weight stack per smoothing scale. Plain SCE uses a single stack;
/// the multi-scale variant keeps an independent stack for each level.
struct ModelParams {
    std::vector<std::vector<DenseMatrix>> scales;

    std::size_t num_scales() const { return scales.size(); }

    double squared_norm() const {
        double s = 0.0;
        for (const auto& stack : scales) {
            for (const auto& w : stack) s += w.frobenius_sq();
        }
        return s;
    }
};

/// Glorot-style uniform initialization on (-sqrt(6/(fan_in+fan_out)), +...).
/// dims_per_scale[s] is the full dimension chain f -> d_1 -> ... -> d_l of
/// scale s. Deterministic given seed.
inline ModelParams init_params(
    const std::vector<std::vector<std::size_t>>& dims_per_scale,
    std::uint64_t seed) {
    if (dims_per_scale.empty()) {
        throw std::invalid_argument("init_params: need at least one scale");
    }
    Rng root(seed);
    ModelParams params;
    params.scales.reserve(dims_per_scale.size());
    for (std::size_t s = 0; s < dims_per_scale.size(); ++s) {
        const auto& dims = dims_per_scale[s];
        if (dims.size() < 2) {
            throw std::invalid_argument(
                "init_params: dimension chain needs at least 2 entries");
        }
        Rng stream = root.derive(s);
        std::vector<DenseMatrix> stack;
        stack.reserve(dims.size() - 1);
        for (std::size_t j = 0; j + 1 < dims.size(); ++j) {
            const std::size_t fan_in = dims[j], fan_out = dims[j + 1];
            if (fan_in == 0 || fan_out == 0) {
                throw std::invalid_argument(
                    "init_params: zero dimension in chain");
            }
            const double bound =
                std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
            DenseMatrix w(fan_in, fan_out);
            for (std::size_t i = 0; i < w.size(); ++i) {
                w.data()[i] = stream.next_uniform(-bound, bound);
            }
            stack.push_back(std::move(w));
        }
        params.scales.push_back(std::move(stack));
    }
    return params;
}

/// Applies the linear stack: F * W^(1) * ... * W^(l). No bias, no
/// nonlinearity.
inline DenseMatrix forward(const DenseMatrix& f_smoothed,
                           const std::vector<DenseMatrix>& stack) {
    if (stack.empty()) {
        throw std::invalid_argument("forward: empty weight stack");
    }
    if (f_smoothed.cols() != stack.front().rows()) {
        throw std::invalid_argument(
            "forward: feature cols " + std::to_string(f_smoothed.cols()) +
            " != first layer rows " + std::to_string(stack.front().rows()));
    }
    DenseMatrix cur = matmul(f_smoothed, stack.front());
    for (std::size_t j = 1; j < stack.size(); ++j) {
        cur = matmul(cur, stack[j]);
    }
    return cur;
}

/// Combine per-scale embeddings: concat appends columns in scale order,
/// mean and max act element-wise across scales.
inline DenseMatrix aggregate(const std::vector<DenseMatrix>& z_list,
                             Aggregator mode) {
    if (z_list.empty()) {
        throw std::invalid_argument("aggregate: empty embedding list");
    }
    const std::size_t rows = z_list.front().rows();
    for (const auto& z : z_list) {
        if (z.rows() != rows) {
            throw std::invalid_argument("aggregate: row counts differ");
        }
        if (mode != Aggregator::concat && z.cols() != z_list.front().cols()) {
            throw std::invalid_argument(
                "aggregate: column counts differ (only concat allows that)");
        }
    }

    if (mode == Aggregator::none || mode == Aggregator::concat) {
        if (mode == Aggregator::none && z_list.size() != 1) {
            throw std::invalid_argument(
                "aggregate: mode none expects a single scale");
        }
        std::size_t total_cols = 0;
        for (const auto& z : z_list) total_cols += z.cols();
        DenseMatrix out(rows, total_cols);
        std::size_t offset = 0;
        for (const auto& z : z_list) {
            for (std::size_t i = 0; i < rows; ++i) {
                const double* src = z.row(i);
                double* dst = out.row(i) + offset;
                for (std::size_t j = 0; j < z.cols(); ++j) dst[j] = src[j];
            }
            offset += z.cols();
        }
        return out;
    }

    DenseMatrix out = z_list.front();
    if (mode == Aggregator::mean) {
        for (std::size_t s = 1; s < z_list.size(); ++s) {
            const auto& z = z_list[s];
            for (std::size_t i = 0; i < out.size(); ++i) {
                out.data()[i] += z.data()[i];
            }
        }
        const double inv = 1.0 / static_cast<double>(z_list.size());
        for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= inv;
        return out;
    }

    // max
    for (std::size_t s = 1; s < z_list.size(); ++s) {
        const auto& z = z_list[s];
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (z.data()[i] > out.data()[i]) out.data()[i] = z.data()[i];
        }
    }
    return out;
}

}  // namespace sce
