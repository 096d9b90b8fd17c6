#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sce/graph.hpp"
#include "sce/matrix.hpp"
#include "sce/model.hpp"
#include "sce/rng.hpp"
#include "sce/smoothing.hpp"

namespace sce {

/// Raised when the sampled pair distances sum to (numerically) zero, so
/// the inverse-distance loss is undefined.
struct DegenerateEmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LossKind { sce, negative };

inline LossKind loss_kind_from_string(const std::string& s) {
    if (s == "sce") return LossKind::sce;
    if (s == "negative") return LossKind::negative;
    throw std::invalid_argument("unknown loss '" + s +
                                "' (expected sce|negative)");
}

/// The sampled node pairs; the graph H = (V, pairs) whose Laplacian
/// quadratic form is the denominator of the sparse loss.
struct NegativePairSet {
    std::vector<std::pair<NodeId, NodeId>> pairs;

    std::size_t size() const { return pairs.size(); }
};

/// Draw per_node partners for every node, uniformly from the other nodes,
/// with replacement across draws. Edges of the underlying graph are not
/// excluded. Deterministic given seed.
inline NegativePairSet sample_negatives(std::size_t n, std::size_t per_node,
                                        std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument(
            "sample_negatives: need at least 2 nodes, got " +
            std::to_string(n));
    }
    Rng rng(seed);
    NegativePairSet set;
    set.pairs.reserve(n * per_node);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < per_node; ++s) {
            std::uint64_t j = rng.next_below(n - 1);
            if (j >= i) ++j;  // skip self
            set.pairs.emplace_back(static_cast<NodeId>(i),
                                   static_cast<NodeId>(j));
        }
    }
    return set;
}

/// Sum of squared embedding distances over the sampled pairs, i.e.
/// Tr(Z^T L_H Z) with H the negative-sample graph.
inline double pair_distance_sum(const DenseMatrix& z,
                                const NegativePairSet& neg) {
    const std::size_t d = z.cols();
    double total = 0.0;
    for (const auto& [i, j] : neg.pairs) {
        if (i >= z.rows() || j >= z.rows()) {
            throw std::out_of_range("pair_distance_sum: pair (" +
                                    std::to_string(i) + ", " +
                                    std::to_string(j) +
                                    ") out of range for " +
                                    std::to_string(z.rows()) + " rows");
        }
        const double* zi = z.row(i);
        const double* zj = z.row(j);
        double dist = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = zi[c] - zj[c];
            dist += diff * diff;
        }
        total += dist;
    }
    return total;
}

constexpr double kDegenerateThreshold = 1e-12;

/// The inverse pairwise-distance loss: 1 / sum of sampled squared
/// distances. Minimizing it spreads negative pairs apart.
inline double sce_loss(const DenseMatrix& z, const NegativePairSet& neg) {
    const double s = pair_distance_sum(z, neg);
    if (s < kDegenerateThreshold) {
        throw DegenerateEmbeddingError(
            "sce_loss: pair distance sum " + std::to_string(s) +
            " is below 1e-12 (all sampled pairs coincide)");
    }
    return 1.0 / s;
}

/// Ablation objective: minus the sum of sampled squared distances.
inline double negative_distance_loss(const DenseMatrix& z,
                                     const NegativePairSet& neg) {
    return -pair_distance_sum(z, neg);
}

/// alpha * unsupervised loss + beta * ||theta||^2.
inline double total_loss(const DenseMatrix& z, const NegativePairSet& neg,
                         const ModelParams& params, double alpha, double beta,
                         LossKind kind = LossKind::sce) {
    double loss = 0.0;
    if (alpha != 0.0) {
        loss += alpha * (kind == LossKind::sce ? sce_loss(z, neg)
                                               : negative_distance_loss(z, neg));
    }
    if (beta != 0.0) {
        loss += beta * params.squared_norm();
    }
    return loss;
}

using GradientSet = std::vector<std::vector<DenseMatrix>>;

namespace detail {

struct ScaleCache {
    std::vector<DenseMatrix> hidden;  // layer inputs A_2..A_l (empty if l=1)
    DenseMatrix z;                    // scale output
};

struct ForwardCache {
    std::vector<ScaleCache> scales;
    DenseMatrix z;  // aggregated embedding
};

inline ForwardCache forward_all(const std::vector<DenseMatrix>& features,
                                const ModelParams& params, Aggregator mode) {
    if (features.size() != params.num_scales()) {
        throw std::invalid_argument(
            "forward_all: feature scale count " +
            std::to_string(features.size()) + " != weight stack count " +
            std::to_string(params.num_scales()));
    }
    ForwardCache cache;
    cache.scales.resize(params.num_scales());
    std::vector<DenseMatrix> z_list;
    z_list.reserve(params.num_scales());
    for (std::size_t s = 0; s < params.num_scales(); ++s) {
        const auto& stack = params.scales[s];
        ScaleCache& sc = cache.scales[s];
        const DenseMatrix* cur = &features[s];
        for (std::size_t j = 0; j + 1 < stack.size(); ++j) {
            sc.hidden.push_back(matmul(*cur, stack[j]));
            cur = &sc.hidden.back();
        }
        sc.z = matmul(*cur, stack.back());
        z_list.push_back(sc.z);
    }
    cache.z = aggregate(z_list, mode);
    return cache;
}

/// d(pair sum)/dZ: row i accumulates 2 * (z_i - z_j) over every sampled
/// pair containing i.
inline DenseMatrix pair_sum_gradient(const DenseMatrix& z,
                                     const NegativePairSet& neg) {
    DenseMatrix grad(z.rows(), z.cols());
    const std::size_t d = z.cols();
    for (const auto& [i, j] : neg.pairs) {
        if (i >= z.rows() || j >= z.rows()) {
            throw std::out_of_range("pair_sum_gradient: pair index out of range");
        }
        const double* zi = z.row(i);
        const double* zj = z.row(j);
        double* gi = grad.row(i);
        double* gj = grad.row(j);
        for (std::size_t c = 0; c < d; ++c) {
            const double diff = 2.0 * (zi[c] - zj[c]);
            gi[c] += diff;
            gj[c] -= diff;
        }
    }
    return grad;
}

/// Split the aggregated gradient back into per-scale gradients. Max
/// pooling routes each entry to the first scale attaining the maximum.
inline std::vector<DenseMatrix> split_aggregate_gradient(
    const ForwardCache& cache, const DenseMatrix& g_agg, Aggregator mode) {
    const std::size_t num_scales = cache.scales.size();
    std::vector<DenseMatrix> out;
    out.reserve(num_scales);
    switch (mode) {
        case Aggregator::none:
            out.push_back(g_agg);
            break;
        case Aggregator::concat: {
            std::size_t offset = 0;
            for (std::size_t s = 0; s < num_scales; ++s) {
                const std::size_t cols = cache.scales[s].z.cols();
                DenseMatrix g(g_agg.rows(), cols);
                for (std::size_t i = 0; i < g.rows(); ++i) {
                    const double* src = g_agg.row(i) + offset;
                    double* dst = g.row(i);
                    for (std::size_t j = 0; j < cols; ++j) dst[j] = src[j];
                }
                out.push_back(std::move(g));
                offset += cols;
            }
            break;
        }
        case Aggregator::mean: {
            const double inv = 1.0 / static_cast<double>(num_scales);
            for (std::size_t s = 0; s < num_scales; ++s) {
                out.push_back(inv * g_agg);
            }
            break;
        }
        case Aggregator::max: {
            for (std::size_t s = 0; s < num_scales; ++s) {
                out.emplace_back(g_agg.rows(), g_agg.cols());
            }
            for (std::size_t idx = 0; idx < g_agg.size(); ++idx) {
                const double top = cache.z.data()[idx];
                for (std::size_t s = 0; s < num_scales; ++s) {
                    if (cache.scales[s].z.data()[idx] == top) {
                        out[s].data()[idx] = g_agg.data()[idx];
                        break;  // ties go to the lowest scale index
                    }
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace detail

struct GradientResult {
    GradientSet grads;
    double loss = 0.0;
    double pair_sum = 0.0;
};

/// Exact gradient of the total loss with respect to every weight matrix.
/// The smoothing filter is fixed, so backpropagation runs through the
/// linear stacks and the aggregator only.
inline GradientResult loss_gradient(const std::vector<DenseMatrix>& features,
                                    const ModelParams& params,
                                    const NegativePairSet& neg, double alpha,
                                    double beta, Aggregator mode,
                                    LossKind kind = LossKind::sce) {
    detail::ForwardCache cache = detail::forward_all(features, params, mode);

    GradientResult result;
    result.grads.resize(params.num_scales());
    for (std::size_t s = 0; s < params.num_scales(); ++s) {
        for (const auto& w : params.scales[s]) {
            result.grads[s].emplace_back(w.rows(), w.cols());
        }
    }

    result.pair_sum = pair_distance_sum(cache.z, neg);
    if (alpha != 0.0) {
        if (kind == LossKind::sce) {
            if (result.pair_sum < kDegenerateThreshold) {
                throw DegenerateEmbeddingError(
                    "loss_gradient: pair distance sum below 1e-12");
            }
            result.loss += alpha / result.pair_sum;
        } else {
            result.loss += alpha * -result.pair_sum;
        }

        DenseMatrix g_agg = detail::pair_sum_gradient(cache.z, neg);
        // d(unsup)/dS is -1/S^2 for the inverse loss and -1 for the
        // negated-sum loss; fold alpha in here.
        const double scale =
            kind == LossKind::sce
                ? -alpha / (result.pair_sum * result.pair_sum)
                : -alpha;
        for (std::size_t i = 0; i < g_agg.size(); ++i) {
            g_agg.data()[i] *= scale;
        }

        std::vector<DenseMatrix> g_scales =
            detail::split_aggregate_gradient(cache, g_agg, mode);
        for (std::size_t s = 0; s < params.num_scales(); ++s) {
            const auto& stack = params.scales[s];
            const auto& hidden = cache.scales[s].hidden;
            DenseMatrix delta = std::move(g_scales[s]);
            for (std::size_t j = stack.size(); j-- > 0;) {
                const DenseMatrix& input =
                    j == 0 ? features[s] : hidden[j - 1];
                DenseMatrix dw = matmul_tn(input, delta);
                for (std::size_t idx = 0; idx < dw.size(); ++idx) {
                    result.grads[s][j].data()[idx] += dw.data()[idx];
                }
                if (j > 0) delta = matmul_nt(delta, stack[j]);
            }
        }
    }

    if (beta != 0.0) {
        result.loss += beta * params.squared_norm();
        for (std::size_t s = 0; s < params.num_scales(); ++s) {
            for (std::size_t j = 0; j < params.scales[s].size(); ++j) {
                axpy(2.0 * beta, params.scales[s][j], result.grads[s][j]);
            }
        }
    }
    return result;
}

/// Adam accumulators mirroring the parameter shapes.
struct AdamState {
    static constexpr double beta1 = 0.9;
    static constexpr double beta2 = 0.999;
    static constexpr double eps = 1e-8;

    GradientSet m;
    GradientSet v;
    std::size_t t = 0;

    static AdamState like(const ModelParams& params) {
        AdamState state;
        state.m.resize(params.num_scales());
        state.v.resize(params.num_scales());
        for (std::size_t s = 0; s < params.num_scales(); ++s) {
            for (const auto& w : params.scales[s]) {
                state.m[s].emplace_back(w.rows(), w.cols());
                state.v[s].emplace_back(w.rows(), w.cols());
            }
        }
        return state;
    }
};

/// One Adam update with bias correction.
inline void adam_step(ModelParams& params, const GradientSet& grads,
                      AdamState& state, double lr) {
    if (grads.size() != params.num_scales() ||
        state.m.size() != params.num_scales()) {
        throw std::invalid_argument("adam_step: scale count mismatch");
    }
    ++state.t;
    const double bc1 =
        1.0 - std::pow(AdamState::beta1, static_cast<double>(state.t));
    const double bc2 =
        1.0 - std::pow(AdamState::beta2, static_cast<double>(state.t));
    for (std::size_t s = 0; s < params.num_scales(); ++s) {
        if (grads[s].size() != params.scales[s].size()) {
            throw std::invalid_argument("adam_step: layer count mismatch");
        }
        for (std::size_t j = 0; j < params.scales[s].size(); ++j) {
            DenseMatrix& w = params.scales[s][j];
            const DenseMatrix& g = grads[s][j];
            DenseMatrix& m = state.m[s][j];
            DenseMatrix& v = state.v[s][j];
            if (!w.same_shape(g)) {
                throw std::invalid_argument("adam_step: gradient shape mismatch");
            }
            for (std::size_t idx = 0; idx < w.size(); ++idx) {
                const double gi = g.data()[idx];
                m.data()[idx] =
                    AdamState::beta1 * m.data()[idx] +
                    (1.0 - AdamState::beta1) * gi;
                v.data()[idx] =
                    AdamState::beta2 * v.data()[idx] +
                    (1.0 - AdamState::beta2) * gi * gi;
                const double m_hat = m.data()[idx] / bc1;
                const double v_hat = v.data()[idx] / bc2;
                w.data()[idx] -=
                    lr * m_hat / (std::sqrt(v_hat) + AdamState::eps);
            }
        }
    }
}

/// Hyper-parameters of one training run. dims is the full dimension chain
/// including the input feature width. batch_size 0 selects the full-batch
/// loop.
struct TrainConfig {
    std::size_t k = 2;
    std::vector<std::size_t> dims;
    double lr = 0.001;
    double alpha = 1.0;
    double beta = 0.0;
    std::size_t epochs = 20;
    std::size_t neg_per_node = 5;
    std::size_t batch_size = 0;
    Aggregator aggregator = Aggregator::none;
    std::uint64_t seed = 0;
};

inline void validate_config(const TrainConfig& config) {
    if (!(config.lr > 0.0)) {
        throw std::invalid_argument("config: lr must be > 0");
    }
    if (config.alpha < 0.0 || config.beta < 0.0) {
        throw std::invalid_argument("config: alpha and beta must be >= 0");
    }
    if (config.neg_per_node < 1) {
        throw std::invalid_argument("config: neg_per_node must be >= 1");
    }
    if (config.dims.size() < 2) {
        throw std::invalid_argument(
            "config: dims must chain at least two sizes (input, output)");
    }
    for (std::size_t d : config.dims) {
        if (d == 0) throw std::invalid_argument("config: zero dimension");
    }
}

inline std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(token, &pos);
            if (pos != token.size() || v <= 0) throw std::invalid_argument("");
            dims.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("dims: bad entry '" + token + "'");
        }
    }
    if (dims.empty()) {
        throw std::invalid_argument("dims: empty list");
    }
    return dims;
}

/// Apply `key = value` lines onto a config. Keys are exactly the
/// TrainConfig field names; anything else is an error. Blank lines and
/// '#' comments are allowed.
inline void parse_train_config(std::istream& in, TrainConfig& config) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        auto trim = [](std::string s) {
            const std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const std::size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": empty value for '" + key + "'");
        }
        try {
            if (key == "k") {
                config.k = std::stoull(value);
            } else if (key == "dims") {
                config.dims = parse_dims(value);
            } else if (key == "lr") {
                config.lr = std::stod(value);
            } else if (key == "alpha") {
                config.alpha = std::stod(value);
            } else if (key == "beta") {
                config.beta = std::stod(value);
            } else if (key == "epochs") {
                config.epochs = std::stoull(value);
            } else if (key == "neg_per_node") {
                config.neg_per_node = std::stoull(value);
            } else if (key == "batch_size") {
                config.batch_size = std::stoull(value);
            } else if (key == "aggregator") {
                config.aggregator = aggregator_from_string(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else {
                throw std::runtime_error("config line " +
                                         std::to_string(line_no) +
                                         ": unknown key '" + key + "'");
            }
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": bad value for '" + key + "': " +
                                     e.what());
        }
    }
}

struct TrainResult {
    ModelParams params;
    std::vector<double> loss_history;  // total loss after each update
    double initial_loss = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

// Seed stream ids for the deterministic sub-generators of a run.
constexpr std::uint64_t kStreamInit = 1;
constexpr std::uint64_t kStreamNegatives = 2;
constexpr std::uint64_t kStreamBatch = 3;

inline std::vector<DenseMatrix> smoothed_scales(const Graph& g,
                                                const DenseMatrix& features,
                                                const TrainConfig& config) {
    SmoothingOperator op(g, config.k);
    if (config.aggregator == Aggregator::none) {
        std::vector<DenseMatrix> out;
        out.push_back(op.smooth(features));
        return out;
    }
    if (config.k == 0) {
        throw std::invalid_argument(
            "train: multi-scale aggregation requires k >= 1");
    }
    return op.smooth_all_scales(features);
}

inline std::vector<std::vector<std::size_t>> dims_per_scale(
    const TrainConfig& config, std::size_t num_scales) {
    return std::vector<std::vector<std::size_t>>(num_scales, config.dims);
}

}  // namespace detail

/// Full-batch training: smooth once, sample negatives once, then run
/// `epochs` Adam steps on the total loss. Deterministic given the seed.
inline TrainResult train(const Graph& g, const DenseMatrix& features,
                         const TrainConfig& config,
                         LossKind kind = LossKind::sce) {
    validate_config(config);
    const std::size_t n = g.num_nodes();
    if (n < 2) {
        throw std::invalid_argument("train: need at least 2 nodes");
    }
    if (features.rows() != n) {
        throw std::invalid_argument("train: feature rows != node count");
    }
    if (features.cols() != config.dims.front()) {
        throw std::invalid_argument(
            "train: dims[0]=" + std::to_string(config.dims.front()) +
            " does not match feature width " +
            std::to_string(features.cols()));
    }

    const std::vector<DenseMatrix> scales =
        detail::smoothed_scales(g, features, config);

    TrainResult result;
    result.params = init_params(detail::dims_per_scale(config, scales.size()),
                                derive_seed(config.seed, detail::kStreamInit));
    if (config.epochs == 0) return result;

    const NegativePairSet neg =
        sample_negatives(n, config.neg_per_node,
                         derive_seed(config.seed, detail::kStreamNegatives));
    AdamState state = AdamState::like(result.params);

    try {
        detail::ForwardCache cache =
            detail::forward_all(scales, result.params, config.aggregator);
        result.initial_loss = total_loss(cache.z, neg, result.params,
                                         config.alpha, config.beta, kind);
    } catch (const DegenerateEmbeddingError& e) {
        throw DegenerateEmbeddingError(std::string("initial loss: ") +
                                       e.what());
    }

    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        try {
            GradientResult grad =
                loss_gradient(scales, result.params, neg, config.alpha,
                              config.beta, config.aggregator, kind);
            adam_step(result.params, grad.grads, state, config.lr);
            detail::ForwardCache cache =
                detail::forward_all(scales, result.params, config.aggregator);
            result.loss_history.push_back(total_loss(
                cache.z, neg, result.params, config.alpha, config.beta, kind));
        } catch (const DegenerateEmbeddingError& e) {
            throw DegenerateEmbeddingError("epoch " + std::to_string(epoch) +
                                           ": " + e.what());
        }
    }
    return result;
}

/// Mini-batch training: smooth once; each step draws batch_size distinct
/// rows, samples in-batch negative pairs, and updates from that batch
/// alone.
inline TrainResult train_minibatch(const Graph& g, const DenseMatrix& features,
                                   const TrainConfig& config,
                                   LossKind kind = LossKind::sce) {
    validate_config(config);
    const std::size_t n = g.num_nodes();
    const std::size_t b = config.batch_size;
    if (b < 2) {
        throw std::invalid_argument(
            "train_minibatch: batch_size must be >= 2 (no pairs otherwise)");
    }
    if (b > n) {
        throw std::invalid_argument("train_minibatch: batch_size exceeds n");
    }
    if (features.rows() != n) {
        throw std::invalid_argument("train_minibatch: feature rows != node count");
    }
    if (features.cols() != config.dims.front()) {
        throw std::invalid_argument(
            "train_minibatch: dims[0] does not match feature width");
    }

    const std::vector<DenseMatrix> scales =
        detail::smoothed_scales(g, features, config);

    TrainResult result;
    result.params = init_params(detail::dims_per_scale(config, scales.size()),
                                derive_seed(config.seed, detail::kStreamInit));
    if (config.epochs == 0) return result;

    AdamState state = AdamState::like(result.params);
    Rng batch_root(derive_seed(config.seed, detail::kStreamBatch));
    std::vector<NodeId> all_rows(n);
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = static_cast<NodeId>(i);

    for (std::size_t step = 1; step <= config.epochs; ++step) {
        Rng rng = batch_root.derive(step);

        // Partial Fisher-Yates: the first b entries become the batch.
        std::vector<NodeId> rows = all_rows;
        for (std::size_t i = 0; i < b; ++i) {
            const std::size_t j = i + rng.next_below(n - i);
            std::swap(rows[i], rows[j]);
        }
        rows.resize(b);

        std::vector<DenseMatrix> batch_scales;
        batch_scales.reserve(scales.size());
        for (const auto& f : scales) {
            DenseMatrix sub(b, f.cols());
            for (std::size_t i = 0; i < b; ++i) {
                const double* src = f.row(rows[i]);
                double* dst = sub.row(i);
                for (std::size_t j = 0; j < f.cols(); ++j) dst[j] = src[j];
            }
            batch_scales.push_back(std::move(sub));
        }

        NegativePairSet neg;
        neg.pairs.reserve(b * config.neg_per_node);
        for (std::size_t i = 0; i < b; ++i) {
            for (std::size_t s = 0; s < config.neg_per_node; ++s) {
                std::uint64_t j = rng.next_below(b - 1);
                if (j >= i) ++j;
                neg.pairs.emplace_back(static_cast<NodeId>(i),
                                       static_cast<NodeId>(j));
            }
        }

        try {
            GradientResult grad =
                loss_gradient(batch_scales, result.params, neg, config.alpha,
                              config.beta, config.aggregator, kind);
            adam_step(result.params, grad.grads, state, config.lr);
            detail::ForwardCache cache = detail::forward_all(
                batch_scales, result.params, config.aggregator);
            result.loss_history.push_back(total_loss(
                cache.z, neg, result.params, config.alpha, config.beta, kind));
        } catch (const DegenerateEmbeddingError& e) {
            throw DegenerateEmbeddingError("step " + std::to_string(step) +
                                           ": " + e.what());
        }
    }
    return result;
}

/// Embeddings for the whole graph under the given parameters (the
/// encoder applied to the cached smoothed features).
inline DenseMatrix embed(const Graph& g, const DenseMatrix& features,
                         const TrainConfig& config,
                         const ModelParams& params) {
    const std::vector<DenseMatrix> scales =
        detail::smoothed_scales(g, features, config);
    detail::ForwardCache cache =
        detail::forward_all(scales, params, config.aggregator);
    return cache.z;
}

}  // namespace sce
