#include <ostream>

#include <json.hpp>

#include "chatmine/csv.hpp"
#include "chatmine/models.hpp"

namespace chatmine {

namespace {

using nlohmann::ordered_json;

constexpr const char* kModelFormat = "chatmine-model";
constexpr int kModelFormatVersion = 1;

ordered_json header(const char* kind) {
    ordered_json j;
    j["format"] = kModelFormat;
    j["format_version"] = kModelFormatVersion;
    j["kind"] = kind;
    return j;
}

void metrics_row(std::ostream& out, const std::string& model, const std::string& fold,
                 const Metrics& m) {
    out << csv_escape(model) << ',' << fold << ',' << format_double(m.accuracy) << ','
        << format_double(m.precision) << ',' << format_double(m.recall) << ','
        << format_double(m.f1) << ',' << m.confusion.tp << ',' << m.confusion.fp << ','
        << m.confusion.fn << ',' << m.confusion.tn << '\n';
}

} // namespace

void dump_model_json(const MajorityModel& m, std::ostream& out) {
    ordered_json j = header("majority");
    j["predicts_true"] = m.predicts_true;
    out << j.dump(2) << '\n';
}

void dump_model_json(const LogisticModel& m, std::ostream& out) {
    ordered_json j = header("logistic");
    j["config"] = {{"learning_rate", m.config.learning_rate},
                   {"epochs", m.config.epochs},
                   {"l2", m.config.l2},
                   {"seed", m.config.seed},
                   {"positive_weight", m.config.positive_weight}};
    j["weights"] = m.weights;
    j["bias"] = m.bias;
    j["feature_mean"] = m.feature_mean;
    j["feature_std"] = m.feature_std;
    out << j.dump(2) << '\n';
}

void dump_model_json(const ForestModel& m, std::ostream& out) {
    ordered_json j = header("forest");
    j["config"] = {{"n_trees", m.config.n_trees}, {"max_features", m.config.max_features},
                   {"min_leaf", m.config.min_leaf}, {"max_depth", m.config.max_depth},
                   {"seed", m.config.seed}, {"positive_weight", m.config.positive_weight}};
    j["n_features"] = m.d;
    ordered_json trees = ordered_json::array();
    for (const DecisionTree& t : m.trees) {
        ordered_json nodes = ordered_json::array();
        for (const TreeNode& n : t.nodes) {
            if (n.feature < 0) {
                nodes.push_back({{"n", n.n_samples}, {"true", n.n_true}});
            } else {
                nodes.push_back({{"f", n.feature},
                                 {"t", n.threshold},
                                 {"l", n.left},
                                 {"r", n.right},
                                 {"n", n.n_samples},
                                 {"true", n.n_true},
                                 {"gain", n.gain}});
            }
        }
        trees.push_back(std::move(nodes));
    }
    j["trees"] = std::move(trees);
    out << j.dump() << '\n'; // compact: forests get large
}

void write_metrics_csv(const std::string& model_name, const Metrics& m, std::ostream& out,
                       bool include_fold_mean) {
    out << "model,fold,accuracy,precision,recall,f1,tp,fp,fn,tn\n";
    for (std::size_t f = 0; f < m.per_fold.size(); ++f)
        metrics_row(out, model_name, std::to_string(f + 1), m.per_fold[f]);
    metrics_row(out, model_name, "pooled", m);
    if (include_fold_mean) metrics_row(out, model_name, "fold-mean", fold_mean_metrics(m));
}

void write_importance_csv(const std::vector<std::pair<std::string, double>>& ranked,
                          std::ostream& out) {
    out << "rank,feature,mean_decrease_entropy\n";
    for (std::size_t i = 0; i < ranked.size(); ++i)
        out << (i + 1) << ',' << csv_escape(ranked[i].first) << ','
            << format_double(ranked[i].second) << '\n';
}

} // namespace chatmine
