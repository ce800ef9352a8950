#include "chatmine/models.hpp"

#include <cmath>

#include "chatmine/error.hpp"

namespace chatmine {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// numerically safe log(sigmoid(z)) and log(1 - sigmoid(z))
double log_sigmoid(double z) { return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z)); }

} // namespace

double LogisticModel::probability(const double* row) const {
    double z = bias;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double stdev = feature_std[j];
        const double zj = stdev > 0.0 ? (row[j] - feature_mean[j]) / stdev : 0.0;
        z += weights[j] * zj;
    }
    return sigmoid(z);
}

double logistic_loss(const std::vector<double>& x, const std::vector<std::uint8_t>& y,
                     std::size_t n, std::size_t d, const std::vector<double>& w, double bias,
                     double l2, double positive_weight) {
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double z = bias;
        const double* row = x.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) z += w[j] * row[j];
        // NLL of the Bernoulli likelihood
        loss += y[i] ? -positive_weight * log_sigmoid(z) : -log_sigmoid(-z);
    }
    loss /= static_cast<double>(n);
    double reg = 0.0;
    for (double wj : w) reg += wj * wj;
    return loss + 0.5 * l2 * reg;
}

void logistic_gradient(const std::vector<double>& x, const std::vector<std::uint8_t>& y,
                       std::size_t n, std::size_t d, const std::vector<double>& w, double bias,
                       double l2, std::vector<double>& grad_w, double& grad_b,
                       double positive_weight) {
    grad_w.assign(d, 0.0);
    grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = x.data() + i * d;
        double z = bias;
        for (std::size_t j = 0; j < d; ++j) z += w[j] * row[j];
        const double sample_weight = y[i] ? positive_weight : 1.0;
        const double err = sample_weight * (sigmoid(z) - (y[i] ? 1.0 : 0.0));
        for (std::size_t j = 0; j < d; ++j) grad_w[j] += err * row[j];
        grad_b += err;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < d; ++j) grad_w[j] = grad_w[j] * inv_n + l2 * w[j];
    grad_b *= inv_n;
}

LogisticModel train_logistic(const Dataset& ds, const LogisticConfig& cfg) {
    ds.validate();
    const std::size_t n = ds.n, d = ds.d;

    LogisticModel model;
    model.config = cfg;
    model.feature_mean.assign(d, 0.0);
    model.feature_std.assign(d, 0.0);

    // z-score standardization; constant columns are mapped to 0
    for (std::size_t j = 0; j < d; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += ds.at(i, j);
        model.feature_mean[j] = sum / static_cast<double>(n);
    }
    for (std::size_t j = 0; j < d; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = ds.at(i, j) - model.feature_mean[j];
            sq += dev * dev;
        }
        model.feature_std[j] = std::sqrt(sq / static_cast<double>(n));
    }

    std::vector<double> z(n * d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            z[i * d + j] = model.feature_std[j] > 0.0
                               ? (ds.at(i, j) - model.feature_mean[j]) / model.feature_std[j]
                               : 0.0;

    model.weights.assign(d, 0.0);
    model.bias = 0.0;

    std::vector<double> grad_w(d, 0.0);
    double grad_b = 0.0;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        logistic_gradient(z, ds.y, n, d, model.weights, model.bias, cfg.l2, grad_w, grad_b,
                          cfg.positive_weight);
        for (std::size_t j = 0; j < d; ++j) model.weights[j] -= cfg.learning_rate * grad_w[j];
        model.bias -= cfg.learning_rate * grad_b;

        const double loss = logistic_loss(z, ds.y, n, d, model.weights, model.bias, cfg.l2,
                                          cfg.positive_weight);
        if (!std::isfinite(loss))
            throw TrainingError("logistic training diverged (non-finite loss) at epoch " +
                                std::to_string(epoch + 1));
    }
    return model;
}

} // namespace chatmine
