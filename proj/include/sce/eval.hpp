#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sce/matrix.hpp"
#include "sce/rng.hpp"

namespace sce {

/// One transductive split: a fixed number of labeled nodes per class for
/// training the probe, everything else labeled becomes test.
struct LabeledSplit {
    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> test_idx;
    std::vector<int> labels;  // per node, -1 = unlabeled
    int num_classes = 0;
};

/// Per-class uniform sampling without replacement; deterministic given
/// seed, one derived stream per split.
inline std::vector<LabeledSplit> make_splits(const std::vector<int>& labels,
                                             std::size_t per_class,
                                             std::size_t num_splits,
                                             std::uint64_t seed) {
    int num_classes = 0;
    for (int label : labels) {
        if (label >= num_classes) num_classes = label + 1;
    }
    if (num_classes == 0) {
        throw std::invalid_argument("make_splits: no labeled nodes");
    }
    std::vector<std::vector<std::size_t>> by_class(num_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= 0) by_class[labels[i]].push_back(i);
    }
    for (int c = 0; c < num_classes; ++c) {
        if (by_class[c].size() < per_class) {
            throw std::invalid_argument(
                "make_splits: class " + std::to_string(c) + " has only " +
                std::to_string(by_class[c].size()) + " members, need " +
                std::to_string(per_class));
        }
    }

    Rng root(seed);
    std::vector<LabeledSplit> splits;
    splits.reserve(num_splits);
    for (std::size_t s = 0; s < num_splits; ++s) {
        Rng rng = root.derive(s);
        LabeledSplit split;
        split.labels = labels;
        split.num_classes = num_classes;
        std::vector<bool> in_train(labels.size(), false);
        for (int c = 0; c < num_classes; ++c) {
            std::vector<std::size_t> pool = by_class[c];
            for (std::size_t i = 0; i < per_class; ++i) {
                const std::size_t j = i + rng.next_below(pool.size() - i);
                std::swap(pool[i], pool[j]);
                split.train_idx.push_back(pool[i]);
                in_train[pool[i]] = true;
            }
        }
        std::sort(split.train_idx.begin(), split.train_idx.end());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] >= 0 && !in_train[i]) split.test_idx.push_back(i);
        }
        splits.push_back(std::move(split));
    }
    return splits;
}

/// Micro-averaged F1 from pooled true/false positives and false negatives
/// across classes. For single-label predictions this equals accuracy.
inline double micro_f1(const std::vector<int>& pred,
                       const std::vector<int>& truth) {
    if (pred.size() != truth.size()) {
        throw std::invalid_argument("micro_f1: length mismatch");
    }
    std::uint64_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i] == truth[i]) {
            ++tp;
        } else {
            ++fp;  // wrong prediction for the predicted class
            ++fn;  // miss for the true class
        }
    }
    if (tp == 0) return 0.0;
    const double precision = static_cast<double>(tp) / (tp + fp);
    const double recall = static_cast<double>(tp) / (tp + fn);
    return 2.0 * precision * recall / (precision + recall);
}

struct ProbeResult {
    double accuracy = 0.0;
    double micro_f1 = 0.0;
    DenseMatrix weights;               // d x num_classes
    std::vector<double> train_loss;    // per iteration, before each update
    std::vector<int> predictions;      // per test index
};

/// Multinomial logistic regression probe on frozen embeddings: softmax
/// cross-entropy (mean over train rows) + l2 * ||W||^2, full-batch
/// gradient descent from zero-initialized weights, fixed iteration count.
inline ProbeResult logistic_probe(const DenseMatrix& z,
                                  const LabeledSplit& split, double l2 = 1e-4,
                                  std::size_t iters = 300, double lr = 0.1) {
    if (iters < 1) {
        throw std::invalid_argument("logistic_probe: iters must be >= 1");
    }
    for (std::size_t idx : split.train_idx) {
        if (idx >= z.rows()) {
            throw std::out_of_range("logistic_probe: train index out of range");
        }
    }
    for (std::size_t idx : split.test_idx) {
        if (idx >= z.rows()) {
            throw std::out_of_range("logistic_probe: test index out of range");
        }
    }
    const int num_classes = split.num_classes;
    if (num_classes < 2) {
        throw std::invalid_argument("logistic_probe: need >= 2 classes");
    }
    {
        std::vector<bool> seen(num_classes, false);
        int distinct = 0;
        for (std::size_t idx : split.train_idx) {
            const int c = split.labels[idx];
            if (!seen[c]) {
                seen[c] = true;
                ++distinct;
            }
        }
        if (distinct < 2) {
            throw std::invalid_argument(
                "logistic_probe: train set contains a single class");
        }
    }

    const std::size_t d = z.cols();
    const std::size_t n_train = split.train_idx.size();
    DenseMatrix w(d, num_classes);
    ProbeResult result;
    result.train_loss.reserve(iters);

    std::vector<double> logits(num_classes);
    DenseMatrix grad(d, num_classes);

    for (std::size_t it = 0; it < iters; ++it) {
        grad.fill(0.0);
        double loss = 0.0;
        for (std::size_t row = 0; row < n_train; ++row) {
            const std::size_t idx = split.train_idx[row];
            const double* x = z.row(idx);
            const int y = split.labels[idx];
            double max_logit = -std::numeric_limits<double>::infinity();
            for (int c = 0; c < num_classes; ++c) {
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += x[j] * w(j, c);
                logits[c] = s;
                if (s > max_logit) max_logit = s;
            }
            double denom = 0.0;
            for (int c = 0; c < num_classes; ++c) {
                logits[c] = std::exp(logits[c] - max_logit);
                denom += logits[c];
            }
            loss -= std::log(logits[y] / denom);
            for (int c = 0; c < num_classes; ++c) {
                const double p = logits[c] / denom;
                const double delta = p - (c == y ? 1.0 : 0.0);
                for (std::size_t j = 0; j < d; ++j) {
                    grad(j, c) += delta * x[j];
                }
            }
        }
        const double inv_n = 1.0 / static_cast<double>(n_train);
        loss = loss * inv_n + l2 * w.frobenius_sq();
        result.train_loss.push_back(loss);
        for (std::size_t idx = 0; idx < w.size(); ++idx) {
            w.data()[idx] -=
                lr * (grad.data()[idx] * inv_n + 2.0 * l2 * w.data()[idx]);
        }
    }

    std::vector<int> truth;
    truth.reserve(split.test_idx.size());
    result.predictions.reserve(split.test_idx.size());
    std::size_t correct = 0;
    for (std::size_t idx : split.test_idx) {
        const double* x = z.row(idx);
        int best = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < num_classes; ++c) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += x[j] * w(j, c);
            if (s > best_score) {  // ties keep the lowest class index
                best_score = s;
                best = c;
            }
        }
        result.predictions.push_back(best);
        truth.push_back(split.labels[idx]);
        if (best == split.labels[idx]) ++correct;
    }
    result.accuracy = split.test_idx.empty()
                          ? 0.0
                          : static_cast<double>(correct) /
                                static_cast<double>(split.test_idx.size());
    result.micro_f1 = micro_f1(result.predictions, truth);
    result.weights = std::move(w);
    return result;
}

}  // namespace sce
