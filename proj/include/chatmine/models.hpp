#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chatmine {

struct Dataset {
    std::vector<double> x;       // row-major, n * d
    std::vector<std::uint8_t> y; // 0 = FALSE, 1 = TRUE (dissatisfied)
    std::vector<std::string> feature_names;
    std::size_t n = 0;
    std::size_t d = 0;

    double at(std::size_t i, std::size_t j) const { return x[i * d + j]; }
    const double* row(std::size_t i) const { return x.data() + i * d; }

    // Throws ConfigError on shape mismatch or non-finite entries.
    void validate() const;

    // New dataset keeping only the given feature columns, in order.
    Dataset select_features(const std::vector<std::size_t>& columns) const;
};

struct Confusion {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::uint64_t total() const { return tp + fp + fn + tn; }
};

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0; // TRUE (dissatisfied) is the positive class
    double recall = 0.0;
    double f1 = 0.0;
    Confusion confusion;
    std::vector<Metrics> per_fold; // filled by cross_validate only
};

Metrics metrics_from_confusion(const Confusion& c);
Metrics evaluate(const std::vector<std::uint8_t>& predictions,
                 const std::vector<std::uint8_t>& truth);

// --- majority baseline ---------------------------------------------------

struct MajorityModel {
    bool predicts_true = false; // ties broken toward FALSE
    bool predict(const double*) const { return predicts_true; }
};

MajorityModel train_majority(const std::vector<std::uint8_t>& y);

// --- logistic regression -------------------------------------------------

struct LogisticConfig {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 1e-3;
    std::uint64_t seed = 0;
    double positive_weight = 1.0; // class rebalancing, off by default
};

struct LogisticModel {
    std::vector<double> weights; // over standardized features
    double bias = 0.0;
    std::vector<double> feature_mean;
    std::vector<double> feature_std; // 0 marks a constant column (mapped to 0)
    LogisticConfig config;

    double probability(const double* row) const;
    bool predict(const double* row) const { return probability(row) > 0.5; }
};

// Mean negative log-likelihood + (l2/2)*||w||^2 over raw rows x (n*d
// row-major); positive rows weighted by positive_weight. Exposed so tests can
// difference it against the gradient.
double logistic_loss(const std::vector<double>& x, const std::vector<std::uint8_t>& y,
                     std::size_t n, std::size_t d, const std::vector<double>& w,
                     double bias, double l2, double positive_weight = 1.0);

// Analytic gradient of logistic_loss; grad_w has d entries.
void logistic_gradient(const std::vector<double>& x, const std::vector<std::uint8_t>& y,
                       std::size_t n, std::size_t d, const std::vector<double>& w,
                       double bias, double l2, std::vector<double>& grad_w, double& grad_b,
                       double positive_weight = 1.0);

// Full-batch gradient descent on internally standardized features.
// Throws TrainingError naming the epoch if the loss goes non-finite.
LogisticModel train_logistic(const Dataset& ds, const LogisticConfig& cfg);

// --- random forest ---------------------------------------------------------

struct ForestConfig {
    int n_trees = 100;
    int max_features = 0; // 0 => ceil(sqrt(d))
    int min_leaf = 1;
    int max_depth = 0;    // 0 => unlimited
    std::uint64_t seed = 0;
    int threads = 1;      // per-tree streams keep any value deterministic
    double positive_weight = 1.0; // weights impurity and leaf votes, off by default
};

struct TreeNode {
    int feature = -1; // -1 => leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::uint32_t n_samples = 0; // bootstrap samples reaching this node
    std::uint32_t n_true = 0;
    double gain = 0.0; // information gain of the split, bits
};

struct DecisionTree {
    std::vector<TreeNode> nodes; // nodes[0] is the root
    bool predict(const double* row, double positive_weight = 1.0) const;
};

struct ForestModel {
    std::vector<DecisionTree> trees;
    ForestConfig config;
    std::vector<std::vector<std::uint32_t>> oob_indices; // per tree, sorted
    std::size_t d = 0;

    // Majority vote over trees, ties toward FALSE.
    bool predict(const double* row) const;
    std::vector<std::uint8_t> predict_all(const Dataset& ds) const;
};

// Seeded bootstrap per tree; at each node max_features candidates sampled
// without replacement; best split maximizes entropy information gain, ties
// broken by lowest feature index then lowest threshold.
ForestModel train_forest(const Dataset& ds, const ForestConfig& cfg);

// Mean decrease entropy: per feature, sum over splits of (node sample
// fraction * gain), averaged over trees.
std::vector<double> feature_importance(const ForestModel& m);

// (feature name, importance) sorted descending, ties by name.
std::vector<std::pair<std::string, double>>
rank_importance(const std::vector<double>& importance, const std::vector<std::string>& names);

// --- cross-validation ------------------------------------------------------

struct ClassifierSpec {
    enum class Kind { Majority, Logistic, Forest };
    Kind kind = Kind::Forest;
    LogisticConfig logistic;
    ForestConfig forest;
};

// Seeded shuffle, then k folds with sizes differing by at most one (the first
// n % k folds take the extra element).
std::vector<std::vector<std::uint32_t>> make_folds(std::size_t n, int k, std::uint64_t seed);

// Pooled-confusion metrics across folds; per-fold metrics retained in
// Metrics::per_fold. Per-fold model seeds derive from (seed, fold index).
Metrics cross_validate(const Dataset& ds, const ClassifierSpec& spec, int k, std::uint64_t seed);

// Alternative headline: unweighted mean of the per-fold rates (confusion
// stays pooled).
Metrics fold_mean_metrics(const Metrics& cv);

// --- model dumps and report files -------------------------------------------

void dump_model_json(const MajorityModel& m, std::ostream& out);
void dump_model_json(const LogisticModel& m, std::ostream& out);
void dump_model_json(const ForestModel& m, std::ostream& out);

// Per-fold rows plus a "pooled" row; optionally also a "fold-mean" row:
//   model,fold,accuracy,precision,recall,f1,tp,fp,fn,tn
void write_metrics_csv(const std::string& model_name, const Metrics& m, std::ostream& out,
                       bool include_fold_mean = false);

// rank,feature,mean_decrease_entropy
void write_importance_csv(const std::vector<std::pair<std::string, double>>& ranked,
                          std::ostream& out);

} // namespace chatmine
