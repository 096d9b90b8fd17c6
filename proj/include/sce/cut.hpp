#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sce/graph.hpp"
#include "sce/matrix.hpp"
#include "sce/rng.hpp"

namespace sce {

/// 0/1 membership vector x_S for a node subset S.
struct CutIndicator {
    std::vector<bool> bits;

    static CutIndicator from_nodes(std::size_t n,
                                   const std::vector<NodeId>& nodes) {
        CutIndicator ind;
        ind.bits.assign(n, false);
        for (NodeId u : nodes) {
            if (u >= n) {
                throw std::out_of_range("CutIndicator: node id " +
                                        std::to_string(u) + " >= n");
            }
            ind.bits[u] = true;
        }
        return ind;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (bool b : bits) c += b;
        return c;
    }

    std::vector<NodeId> members() const {
        std::vector<NodeId> out;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i]) out.push_back(static_cast<NodeId>(i));
        }
        return out;
    }
};

enum class CutVariant { phi, phi_prime };

struct CutResult {
    CutIndicator best_set;
    double value = 0.0;
    CutVariant variant = CutVariant::phi;
};

namespace detail {

inline std::uint64_t crossing_edges(const Graph& g, const CutIndicator& s) {
    std::uint64_t crossing = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (!s.bits[u]) continue;
        for (NodeId v : g.neighbors(u)) {
            if (!s.bits[v]) ++crossing;
        }
    }
    return crossing;
}

inline std::size_t checked_side(const Graph& g, const CutIndicator& s,
                                const char* op) {
    if (s.bits.size() != g.num_nodes()) {
        throw std::invalid_argument(std::string(op) +
                                    ": indicator length mismatch");
    }
    const std::size_t size = s.count();
    if (size == 0 || size == g.num_nodes()) {
        throw std::invalid_argument(std::string(op) +
                                    ": subset must be proper and nonempty");
    }
    return size;
}

}  // namespace detail

/// phi(S) = |E(S, S-bar)| / min(|S|, |S-bar|).
inline double edge_expansion(const Graph& g, const CutIndicator& s) {
    const std::size_t size = detail::checked_side(g, s, "edge_expansion");
    const std::size_t other = g.num_nodes() - size;
    const std::uint64_t cut = detail::crossing_edges(g, s);
    return static_cast<double>(cut) /
           static_cast<double>(std::min(size, other));
}

/// phi'(S) = |E(S, S-bar)| / (|S| * |S-bar|), the factor-2 variant.
inline double edge_expansion_prime(const Graph& g, const CutIndicator& s) {
    const std::size_t size =
        detail::checked_side(g, s, "edge_expansion_prime");
    const std::size_t other = g.num_nodes() - size;
    const std::uint64_t cut = detail::crossing_edges(g, s);
    return static_cast<double>(cut) /
           (static_cast<double>(size) * static_cast<double>(other));
}

/// Exhaustive sparsest-cut search over all proper subsets, fixing node 0
/// in S since both objectives are complement-symmetric. Ties break toward
/// the lexicographically smallest indicator bit-vector.
inline CutResult brute_force_sparsest_cut(const Graph& g, CutVariant variant) {
    const std::size_t n = g.num_nodes();
    if (n > 20) {
        throw std::invalid_argument(
            "brute_force_sparsest_cut: n=" + std::to_string(n) +
            " exceeds the enumeration limit of 20");
    }
    if (n < 2) {
        throw std::invalid_argument(
            "brute_force_sparsest_cut: need at least 2 nodes");
    }

    auto lex_less = [](const std::vector<bool>& a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return b[i];  // false < true
        }
        return false;
    };

    CutResult best;
    best.variant = variant;
    bool have_best = false;
    CutIndicator ind;
    ind.bits.assign(n, false);

    const std::uint64_t masks = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask + 1 < masks; ++mask) {
        ind.bits[0] = true;
        for (std::size_t i = 1; i < n; ++i) {
            ind.bits[i] = (mask >> (i - 1)) & 1ull;
        }
        const double value = variant == CutVariant::phi
                                 ? edge_expansion(g, ind)
                                 : edge_expansion_prime(g, ind);
        if (!have_best || value < best.value ||
            (value == best.value && lex_less(ind.bits, best.best_set.bits))) {
            best.best_set = ind;
            best.value = value;
            have_best = true;
        }
    }
    return best;
}

/// All-pairs squared-distance sum Tr(Z^T L_K Z) where K is the complete
/// graph, via the O(nd) identity n*sum||z_i||^2 - ||sum z_i||^2.
inline double full_pair_distance_sum(const DenseMatrix& z) {
    const std::size_t n = z.rows(), d = z.cols();
    if (n <= 1) return 0.0;
    double sq = 0.0;
    std::vector<double> colsum(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* zi = z.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            sq += zi[j] * zi[j];
            colsum[j] += zi[j];
        }
    }
    double norm_sum = 0.0;
    for (double c : colsum) norm_sum += c * c;
    return static_cast<double>(n) * sq - norm_sum;
}

struct SparsificationReport {
    double mean_relative_error = 0.0;
    double max_relative_error = 0.0;
    double mean_estimate = 0.0;
};

/// Empirical check of the pair-sampling estimator behind the sparse loss:
/// each unordered pair enters with probability p and the sampled sum is
/// scaled by 1/p. Reports relative error against the exact all-pairs sum.
/// The reference sum is accumulated in the same pair order as the sampled
/// sum, so p = 1 yields a relative error of exactly zero.
inline SparsificationReport sparsification_check(const DenseMatrix& z,
                                                 double p, std::size_t trials,
                                                 std::uint64_t seed) {
    if (!(p > 0.0) || p > 1.0) {
        throw std::invalid_argument("sparsification_check: p must be in (0, 1]");
    }
    if (trials == 0) {
        throw std::invalid_argument("sparsification_check: trials must be >= 1");
    }

    const std::size_t n = z.rows(), d = z.cols();
    std::vector<double> pair_dist;
    pair_dist.reserve(n > 1 ? n * (n - 1) / 2 : 0);
    double full = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* zi = z.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* zj = z.row(j);
            double dist = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = zi[c] - zj[c];
                dist += diff * diff;
            }
            pair_dist.push_back(dist);
            full += dist;
        }
    }
    if (full < 1e-12) {
        throw std::invalid_argument(
            "sparsification_check: degenerate input, all-pairs sum is zero");
    }

    Rng root(seed);
    SparsificationReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial = root.derive(t);
        double sampled = 0.0;
        for (double dist : pair_dist) {
            if (p < 1.0 && trial.next_double() >= p) continue;
            sampled += dist;
        }
        const double estimate = sampled / p;
        const double rel = std::abs(estimate - full) / full;
        report.mean_relative_error += rel;
        report.max_relative_error = std::max(report.max_relative_error, rel);
        report.mean_estimate += estimate;
    }
    report.mean_relative_error /= static_cast<double>(trials);
    report.mean_estimate /= static_cast<double>(trials);
    return report;
}

}  // namespace sce
