#include "chatmine/models.hpp"

#include <algorithm>
#include <cmath>

#include "chatmine/error.hpp"
#include "chatmine/rng.hpp"

namespace chatmine {

void Dataset::validate() const {
    if (n < 1) throw ConfigError("dataset must contain at least one row");
    if (x.size() != n * d) throw ConfigError("dataset matrix shape mismatch");
    if (y.size() != n) throw ConfigError("dataset label count mismatch");
    if (feature_names.size() != d) throw ConfigError("dataset feature name count mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw ConfigError("dataset contains a non-finite entry");
}

Dataset Dataset::select_features(const std::vector<std::size_t>& columns) const {
    Dataset out;
    out.n = n;
    out.d = columns.size();
    out.y = y;
    out.x.reserve(n * columns.size());
    for (std::size_t j : columns) out.feature_names.push_back(feature_names.at(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : columns) out.x.push_back(at(i, j));
    return out;
}

Metrics metrics_from_confusion(const Confusion& c) {
    Metrics m;
    m.confusion = c;
    const double total = static_cast<double>(c.total());
    if (total > 0.0) m.accuracy = static_cast<double>(c.tp + c.tn) / total;
    const double pred_pos = static_cast<double>(c.tp + c.fp);
    const double actual_pos = static_cast<double>(c.tp + c.fn);
    m.precision = pred_pos > 0.0 ? static_cast<double>(c.tp) / pred_pos : 0.0;
    m.recall = actual_pos > 0.0 ? static_cast<double>(c.tp) / actual_pos : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    return m;
}

Metrics evaluate(const std::vector<std::uint8_t>& predictions,
                 const std::vector<std::uint8_t>& truth) {
    if (predictions.size() != truth.size() || truth.empty())
        throw ConfigError("evaluate: predictions and truth must have equal non-zero length");
    Confusion c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (predictions[i] && truth[i]) ++c.tp;
        else if (predictions[i] && !truth[i]) ++c.fp;
        else if (!predictions[i] && truth[i]) ++c.fn;
        else ++c.tn;
    }
    return metrics_from_confusion(c);
}

MajorityModel train_majority(const std::vector<std::uint8_t>& y) {
    if (y.empty()) throw ConfigError("train_majority: empty label vector");
    std::size_t pos = 0;
    for (std::uint8_t v : y) pos += v ? 1 : 0;
    MajorityModel m;
    m.predicts_true = pos * 2 > y.size(); // ties toward FALSE
    return m;
}

std::vector<std::vector<std::uint32_t>> make_folds(std::size_t n, int k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("cross-validation requires k >= 2");
    if (static_cast<std::size_t>(k) > n)
        throw ConfigError("cross-validation requires n >= k (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");

    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    Rng rng(Rng::mix(seed, 0x666f6c64)); // "fold" stream
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    // first n % k folds take the extra element
    std::vector<std::vector<std::uint32_t>> folds(static_cast<std::size_t>(k));
    const std::size_t base = n / static_cast<std::size_t>(k);
    const std::size_t extra = n % static_cast<std::size_t>(k);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < static_cast<std::size_t>(k); ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        folds[f].assign(order.begin() + static_cast<long>(pos),
                        order.begin() + static_cast<long>(pos + size));
        pos += size;
    }
    return folds;
}

namespace {

Dataset subset_rows(const Dataset& ds, const std::vector<std::uint32_t>& rows) {
    Dataset out;
    out.d = ds.d;
    out.n = rows.size();
    out.feature_names = ds.feature_names;
    out.x.reserve(rows.size() * ds.d);
    out.y.reserve(rows.size());
    for (std::uint32_t r : rows) {
        const double* src = ds.row(r);
        out.x.insert(out.x.end(), src, src + ds.d);
        out.y.push_back(ds.y[r]);
    }
    return out;
}

std::vector<std::uint8_t> predict_with_spec(const ClassifierSpec& spec, const Dataset& train,
                                            const Dataset& test, std::uint64_t model_seed) {
    std::vector<std::uint8_t> preds(test.n, 0);
    switch (spec.kind) {
    case ClassifierSpec::Kind::Majority: {
        MajorityModel m = train_majority(train.y);
        for (std::size_t i = 0; i < test.n; ++i) preds[i] = m.predicts_true ? 1 : 0;
        break;
    }
    case ClassifierSpec::Kind::Logistic: {
        LogisticConfig cfg = spec.logistic;
        cfg.seed = model_seed;
        LogisticModel m = train_logistic(train, cfg);
        for (std::size_t i = 0; i < test.n; ++i) preds[i] = m.predict(test.row(i)) ? 1 : 0;
        break;
    }
    case ClassifierSpec::Kind::Forest: {
        ForestConfig cfg = spec.forest;
        cfg.seed = model_seed;
        ForestModel m = train_forest(train, cfg);
        preds = m.predict_all(test);
        break;
    }
    }
    return preds;
}

} // namespace

Metrics fold_mean_metrics(const Metrics& cv) {
    Metrics out = cv;
    if (cv.per_fold.empty()) return out;
    double acc = 0.0, prec = 0.0, rec = 0.0, f1 = 0.0;
    for (const Metrics& f : cv.per_fold) {
        acc += f.accuracy;
        prec += f.precision;
        rec += f.recall;
        f1 += f.f1;
    }
    const double k = static_cast<double>(cv.per_fold.size());
    out.accuracy = acc / k;
    out.precision = prec / k;
    out.recall = rec / k;
    out.f1 = f1 / k;
    return out;
}

Metrics cross_validate(const Dataset& ds, const ClassifierSpec& spec, int k, std::uint64_t seed) {
    ds.validate();
    const auto folds = make_folds(ds.n, k, seed);

    Confusion pooled;
    std::vector<Metrics> per_fold;
    per_fold.reserve(folds.size());

    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::vector<std::uint32_t> train_rows;
        train_rows.reserve(ds.n - folds[f].size());
        for (std::size_t g = 0; g < folds.size(); ++g)
            if (g != f) train_rows.insert(train_rows.end(), folds[g].begin(), folds[g].end());

        const Dataset train = subset_rows(ds, train_rows);
        const Dataset test = subset_rows(ds, folds[f]);
        const auto preds = predict_with_spec(spec, train, test, Rng::mix(seed, 1000 + f));

        Metrics fold_metrics = evaluate(preds, test.y);
        pooled.tp += fold_metrics.confusion.tp;
        pooled.fp += fold_metrics.confusion.fp;
        pooled.fn += fold_metrics.confusion.fn;
        pooled.tn += fold_metrics.confusion.tn;
        per_fold.push_back(std::move(fold_metrics));
    }

    Metrics out = metrics_from_confusion(pooled);
    out.per_fold = std::move(per_fold);
    return out;
}

} // namespace chatmine
