#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pathloss/errors.hpp"
#include "pathloss/parallel.hpp"
#include "pathloss/rng.hpp"

namespace pathloss {

struct IsolationForestOptions {
    int trees = 100;
    int subsample = 256;
    double contamination = 0.01;
    std::uint64_t seed = 42;
};

// Average unsuccessful-search path length of a BST with m external nodes;
// normalizes isolation depths into the usual anomaly score.
inline double average_path_length(std::size_t m) {
    if (m <= 1) return 0.0;
    if (m == 2) return 1.0;
    constexpr double kEulerGamma = 0.5772156649015329;
    const double h = std::log(static_cast<double>(m - 1)) + kEulerGamma;
    return 2.0 * h - 2.0 * static_cast<double>(m - 1) / static_cast<double>(m);
}

// Forest of random axis-parallel partition trees over row-major data.
// Tree construction and scoring are deterministic for a given seed: every
// tree draws from its own stream, independent of build order or thread count.
class IsolationForest {
public:
    // data: n rows by f columns, row-major.
    IsolationForest(const std::vector<double>& data, std::size_t n,
                    std::size_t features, const IsolationForestOptions& opt)
        : data_(data), n_(n), f_(features), opt_(opt) {
        if (opt_.trees < 1) throw DataError("isolation forest: trees must be >= 1");
        if (opt_.subsample < 2) {
            throw DataError("isolation forest: subsample must be >= 2");
        }
        psi_ = std::min<std::size_t>(static_cast<std::size_t>(opt_.subsample), n_);
        depth_limit_ = static_cast<int>(
            std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(psi_, 2)))));
        trees_.resize(static_cast<std::size_t>(opt_.trees));
        parallel_chunks(trees_.size(), 1, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t t = b; t < e; ++t) build_tree(t);
        });
    }

    // Anomaly score in (0, 1]; higher is more isolated.
    double score(const double* row) const {
        double total = 0.0;
        for (const auto& tree : trees_) total += path_length(tree, row);
        const double mean_path = total / static_cast<double>(trees_.size());
        return std::pow(2.0, -mean_path / average_path_length(psi_));
    }

    std::vector<double> score_all() const {
        std::vector<double> out(n_);
        parallel_chunks(n_, 2048, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t i = b; i < e; ++i) score_into(i, out);
        });
        return out;
    }

    std::size_t sample_size() const { return psi_; }

private:
    struct Node {
        int feature = -1;      // -1 marks a leaf
        double split = 0.0;
        int left = -1;
        int right = -1;
        int size = 0;          // external size at a leaf
    };
    using Tree = std::vector<Node>;

    void score_into(std::size_t i, std::vector<double>& out) const {
        out[i] = score(&data_[i * f_]);
    }

    void build_tree(std::size_t t) {
        Rng rng = Rng::stream(opt_.seed, t);
        // subsample without replacement (partial Fisher-Yates)
        std::vector<std::size_t> idx(n_);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < psi_; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.bounded(n_ - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(psi_);
        Tree& tree = trees_[t];
        tree.reserve(2 * psi_);
        grow(tree, idx, 0, psi_, 0, rng);
    }

    int grow(Tree& tree, std::vector<std::size_t>& idx, std::size_t begin,
             std::size_t end, int depth, Rng& rng) {
        const int node_id = static_cast<int>(tree.size());
        tree.push_back({});
        const std::size_t count = end - begin;
        if (count <= 1 || depth >= depth_limit_) {
            tree[node_id].size = static_cast<int>(count);
            return node_id;
        }
        // choose among features that still vary in this partition
        int feature = -1;
        double lo = 0.0, hi = 0.0;
        std::vector<int> candidates(f_);
        std::iota(candidates.begin(), candidates.end(), 0);
        while (!candidates.empty()) {
            const std::size_t pick =
                static_cast<std::size_t>(rng.bounded(candidates.size()));
            const int fcand = candidates[pick];
            lo = hi = at(idx[begin], fcand);
            for (std::size_t i = begin + 1; i < end; ++i) {
                const double v = at(idx[i], fcand);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (hi > lo) {
                feature = fcand;
                break;
            }
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        if (feature < 0) {  // all-constant partition
            tree[node_id].size = static_cast<int>(count);
            return node_id;
        }
        double split = rng.uniform(lo, hi);
        if (split <= lo) split = std::nextafter(lo, hi);
        auto mid_it = std::stable_partition(
            idx.begin() + static_cast<std::ptrdiff_t>(begin),
            idx.begin() + static_cast<std::ptrdiff_t>(end),
            [&](std::size_t row) { return at(row, feature) < split; });
        std::size_t mid = static_cast<std::size_t>(mid_it - idx.begin());
        if (mid == begin || mid == end) {
            // split landed on the boundary of identical values; force progress
            mid = begin + count / 2;
        }
        tree[node_id].feature = feature;
        tree[node_id].split = split;
        const int left = grow(tree, idx, begin, mid, depth + 1, rng);
        const int right = grow(tree, idx, mid, end, depth + 1, rng);
        tree[node_id].left = left;
        tree[node_id].right = right;
        return node_id;
    }

    double path_length(const Tree& tree, const double* row) const {
        int node = 0;
        int depth = 0;
        for (;;) {
            const Node& nd = tree[static_cast<std::size_t>(node)];
            if (nd.feature < 0) {
                return depth + average_path_length(
                                   static_cast<std::size_t>(nd.size));
            }
            node = row[nd.feature] < nd.split ? nd.left : nd.right;
            ++depth;
        }
    }

    double at(std::size_t row, int feature) const {
        return data_[row * f_ + static_cast<std::size_t>(feature)];
    }

    const std::vector<double>& data_;
    std::size_t n_;
    std::size_t f_;
    IsolationForestOptions opt_;
    std::size_t psi_ = 0;
    int depth_limit_ = 0;
    std::vector<Tree> trees_;
};

// Indices of the floor(contamination * n) highest-scoring rows; score ties
// broken by original row order so the flagged set is stable.
inline std::vector<std::size_t> top_outlier_indices(
    const std::vector<double>& scores, double contamination) {
    if (contamination < 0.0 || contamination >= 0.5) {
        throw DataError("contamination must be in [0, 0.5)");
    }
    const std::size_t n = scores.size();
    const auto flag_count =
        static_cast<std::size_t>(std::floor(contamination * static_cast<double>(n)));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    order.resize(flag_count);
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace pathloss
