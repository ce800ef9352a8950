#include "chatmine/models.hpp"

#include <algorithm>
#include <cmath>

#include "chatmine/error.hpp"
#include "chatmine/parallel.hpp"
#include "chatmine/rng.hpp"

namespace chatmine {

namespace {

// weighted class masses; positive_weight = 1 reduces to plain counts
double entropy_bits(std::size_t n_true, std::size_t n_total, double positive_weight) {
    if (n_total == 0 || n_true == 0 || n_true == n_total) return 0.0;
    const double wt = positive_weight * static_cast<double>(n_true);
    const double wf = static_cast<double>(n_total - n_true);
    const double p = wt / (wt + wf);
    const double q = 1.0 - p;
    return -(p * std::log2(p) + q * std::log2(q));
}

struct SplitChoice {
    bool found = false;
    double gain = 0.0;
    std::size_t feature = 0;
    double threshold = 0.0;
};

struct TreeGrower {
    const Dataset& ds;
    std::size_t max_features;
    int min_leaf;
    int max_depth; // 0 = unlimited
    double positive_weight;
    Rng& rng;
    std::vector<TreeNode>& nodes;
    std::vector<std::uint32_t>& idx; // bootstrap sample, partitioned in place

    // scratch
    std::vector<std::size_t> feature_pool;
    std::vector<std::pair<double, std::uint8_t>> sorted; // (value, label)

    SplitChoice best_split(std::size_t begin, std::size_t end, std::size_t n_true) {
        const std::size_t sz = end - begin;
        const double parent_entropy = entropy_bits(n_true, sz, positive_weight);
        const double parent_mass =
            positive_weight * double(n_true) + double(sz - n_true);

        // candidate features without replacement, evaluated in ascending
        // order so equal gains resolve to the lowest feature index
        for (std::size_t j = 0; j < ds.d; ++j) feature_pool[j] = j;
        for (std::size_t j = 0; j < max_features; ++j) {
            const std::size_t pickj = j + static_cast<std::size_t>(rng.below(ds.d - j));
            std::swap(feature_pool[j], feature_pool[pickj]);
        }
        std::sort(feature_pool.begin(), feature_pool.begin() + static_cast<long>(max_features));

        SplitChoice best;
        for (std::size_t c = 0; c < max_features; ++c) {
            const std::size_t f = feature_pool[c];
            sorted.clear();
            for (std::size_t i = begin; i < end; ++i)
                sorted.emplace_back(ds.at(idx[i], f), ds.y[idx[i]]);
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            std::size_t left_true = 0;
            for (std::size_t i = 0; i + 1 < sz; ++i) {
                left_true += sorted[i].second;
                if (sorted[i].first == sorted[i + 1].first) continue;
                const std::size_t nl = i + 1;
                const std::size_t nr = sz - nl;
                if (nl < static_cast<std::size_t>(min_leaf) ||
                    nr < static_cast<std::size_t>(min_leaf))
                    continue;
                const double left_mass =
                    positive_weight * double(left_true) + double(nl - left_true);
                const double gain =
                    parent_entropy -
                    (left_mass / parent_mass) *
                        entropy_bits(left_true, nl, positive_weight) -
                    ((parent_mass - left_mass) / parent_mass) *
                        entropy_bits(n_true - left_true, nr, positive_weight);
                // strict improvement keeps the first (lowest feature, lowest
                // threshold) of any tie
                if (gain > 0.0 && (!best.found || gain > best.gain)) {
                    best.found = true;
                    best.gain = gain;
                    best.feature = f;
                    best.threshold = 0.5 * (sorted[i].first + sorted[i + 1].first);
                }
            }
        }
        return best;
    }

    void grow() {
        struct Work {
            int node;
            std::size_t begin, end;
            int depth;
        };
        std::vector<Work> stack;
        nodes.push_back({});
        nodes[0].n_samples = static_cast<std::uint32_t>(idx.size());
        stack.push_back({0, 0, idx.size(), 0});

        while (!stack.empty()) {
            const Work w = stack.back();
            stack.pop_back();

            std::size_t n_true = 0;
            for (std::size_t i = w.begin; i < w.end; ++i) n_true += ds.y[idx[i]];
            const std::size_t sz = w.end - w.begin;
            nodes[static_cast<std::size_t>(w.node)].n_samples = static_cast<std::uint32_t>(sz);
            nodes[static_cast<std::size_t>(w.node)].n_true = static_cast<std::uint32_t>(n_true);

            const bool pure = n_true == 0 || n_true == sz;
            const bool too_small = sz < 2 * static_cast<std::size_t>(min_leaf) || sz < 2;
            const bool too_deep = max_depth > 0 && w.depth >= max_depth;
            if (pure || too_small || too_deep) continue;

            const SplitChoice split = best_split(w.begin, w.end, n_true);
            if (!split.found) continue;

            auto mid_it = std::partition(
                idx.begin() + static_cast<long>(w.begin), idx.begin() + static_cast<long>(w.end),
                [&](std::uint32_t r) { return ds.at(r, split.feature) <= split.threshold; });
            const std::size_t mid =
                static_cast<std::size_t>(mid_it - idx.begin());

            TreeNode& node = nodes[static_cast<std::size_t>(w.node)];
            node.feature = static_cast<int>(split.feature);
            node.threshold = split.threshold;
            node.gain = split.gain;
            node.left = static_cast<int>(nodes.size());
            node.right = node.left + 1;
            nodes.push_back({});
            nodes.push_back({});

            const int left = nodes[static_cast<std::size_t>(w.node)].left;
            const int right = nodes[static_cast<std::size_t>(w.node)].right;
            stack.push_back({right, mid, w.end, w.depth + 1});
            stack.push_back({left, w.begin, mid, w.depth + 1});
        }
    }
};

} // namespace

bool DecisionTree::predict(const double* row, double positive_weight) const {
    std::size_t at = 0;
    while (nodes[at].feature >= 0) {
        const TreeNode& n = nodes[at];
        at = static_cast<std::size_t>(row[n.feature] <= n.threshold ? n.left : n.right);
    }
    const TreeNode& leaf = nodes[at];
    // ties toward FALSE
    return positive_weight * double(leaf.n_true) > double(leaf.n_samples - leaf.n_true);
}

bool ForestModel::predict(const double* row) const {
    std::size_t votes_true = 0;
    for (const DecisionTree& t : trees)
        votes_true += t.predict(row, config.positive_weight) ? 1 : 0;
    return votes_true * 2 > trees.size(); // ties toward FALSE
}

std::vector<std::uint8_t> ForestModel::predict_all(const Dataset& ds) const {
    std::vector<std::uint8_t> out(ds.n, 0);
    for (std::size_t i = 0; i < ds.n; ++i) out[i] = predict(ds.row(i)) ? 1 : 0;
    return out;
}

ForestModel train_forest(const Dataset& ds, const ForestConfig& cfg) {
    ds.validate();
    if (cfg.n_trees < 1) throw ConfigError("forest needs n_trees >= 1");
    if (cfg.min_leaf < 1) throw ConfigError("forest needs min_leaf >= 1");

    ForestModel model;
    model.config = cfg;
    model.d = ds.d;
    const std::size_t max_features =
        cfg.max_features > 0
            ? std::min<std::size_t>(static_cast<std::size_t>(cfg.max_features), ds.d)
            : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(ds.d))));

    model.trees.resize(static_cast<std::size_t>(cfg.n_trees));
    model.oob_indices.resize(static_cast<std::size_t>(cfg.n_trees));

    parallel_for(static_cast<std::size_t>(cfg.n_trees), cfg.threads, [&](std::size_t t) {
        Rng rng(Rng::mix(cfg.seed, t));

        std::vector<std::uint32_t> sample(ds.n);
        std::vector<std::uint8_t> in_bag(ds.n, 0);
        for (std::size_t i = 0; i < ds.n; ++i) {
            const std::uint32_t r = static_cast<std::uint32_t>(rng.below(ds.n));
            sample[i] = r;
            in_bag[r] = 1;
        }
        for (std::uint32_t i = 0; i < ds.n; ++i)
            if (!in_bag[i]) model.oob_indices[t].push_back(i);

        TreeGrower grower{ds,
                          max_features,
                          cfg.min_leaf,
                          cfg.max_depth,
                          cfg.positive_weight,
                          rng,
                          model.trees[t].nodes,
                          sample,
                          std::vector<std::size_t>(ds.d),
                          {}};
        grower.sorted.reserve(ds.n);
        grower.grow();
    });
    return model;
}

std::vector<double> feature_importance(const ForestModel& m) {
    std::vector<double> importance(m.d, 0.0);
    if (m.trees.empty()) return importance;
    for (const DecisionTree& tree : m.trees) {
        if (tree.nodes.empty()) continue;
        const double root_n = static_cast<double>(tree.nodes[0].n_samples);
        if (root_n <= 0.0) continue;
        for (const TreeNode& node : tree.nodes) {
            if (node.feature < 0) continue;
            importance[static_cast<std::size_t>(node.feature)] +=
                (static_cast<double>(node.n_samples) / root_n) * node.gain;
        }
    }
    for (double& v : importance) v /= static_cast<double>(m.trees.size());
    return importance;
}

std::vector<std::pair<std::string, double>>
rank_importance(const std::vector<double>& importance, const std::vector<std::string>& names) {
    if (importance.size() != names.size())
        throw ConfigError("importance/name count mismatch");
    std::vector<std::pair<std::string, double>> out;
    out.reserve(importance.size());
    for (std::size_t j = 0; j < importance.size(); ++j)
        out.emplace_back(names[j], importance[j]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

} // namespace chatmine
