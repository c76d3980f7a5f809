#include "textclass/linear.hpp"

#include <cmath>

#include "textclass/rng.hpp"

namespace textclass {

Matrix augmented(const Matrix& X) {
    Matrix out(X.rows(), X.cols() + 1);
    out.col(0).setOnes();
    out.rightCols(X.cols()) = X;
    return out;
}

Vector augmented(const Vector& x) {
    Vector out(x.size() + 1);
    out[0] = 1.0;
    out.tail(x.size()) = x;
    return out;
}

namespace {

// Row-wise softmax of the logit matrix X_aug * theta^T.
Matrix softmax_rows(const Matrix& logits) {
    Matrix p(logits.rows(), logits.cols());
    for (Index i = 0; i < logits.rows(); ++i) {
        Eigen::RowVectorXd row = logits.row(i);
        double mx = row.maxCoeff();
        Eigen::ArrayXd e = (row.array() - mx).exp();
        p.row(i) = (e / e.sum()).matrix();
    }
    return p;
}

void check_labels(const Matrix& X_aug, const std::vector<int>& y, Index k) {
    if (static_cast<std::size_t>(X_aug.rows()) != y.size())
        throw Error("linear: X/y size mismatch");
    if (y.empty()) throw Error("linear: empty training data");
    for (int label : y)
        if (label < 0 || label >= k) throw Error("linear: label index out of range");
}

} // namespace

Vector softmax_probabilities(const Matrix& theta, const Vector& d_aug) {
    if (theta.cols() != d_aug.size()) throw Error("linear: dimension mismatch");
    Vector logits = theta * d_aug;
    double mx = logits.maxCoeff();
    Eigen::ArrayXd e = (logits.array() - mx).exp();
    return (e / e.sum()).matrix();
}

double cross_entropy_cost(const Matrix& theta, const Matrix& X_aug, const std::vector<int>& y) {
    check_labels(X_aug, y, theta.rows());
    Matrix p = softmax_rows(X_aug * theta.transpose());
    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        sum += std::log(p(static_cast<Index>(i), y[i]));
    return -sum / static_cast<double>(y.size());
}

Matrix cross_entropy_gradient(const Matrix& theta, const Matrix& X_aug,
                              const std::vector<int>& y) {
    check_labels(X_aug, y, theta.rows());
    Matrix p = softmax_rows(X_aug * theta.transpose());
    for (std::size_t i = 0; i < y.size(); ++i)
        p(static_cast<Index>(i), y[i]) -= 1.0;  // p - one_hot(y)
    return (p.transpose() * X_aug) / static_cast<double>(y.size());
}

LinearModel train_logistic(const Matrix& X, const std::vector<int>& y,
                           const std::vector<std::string>& classes,
                           const std::string& space_ref, const GdConfig& cfg) {
    if (cfg.epochs < 1) throw Error("linear: epochs must be >= 1");
    if (cfg.alpha <= 0.0) throw Error("linear: alpha must be > 0");
    Matrix X_aug = augmented(X);
    const Index k = static_cast<Index>(classes.size());
    check_labels(X_aug, y, k);

    Matrix theta = Matrix::Zero(k, X_aug.cols());
    double alpha = cfg.alpha;
    double cost = cross_entropy_cost(theta, X_aug, y);
    if (!std::isfinite(cost)) throw Error("linear: non-finite cost");

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        Matrix grad = cross_entropy_gradient(theta, X_aug, y);
        Matrix candidate;
        double new_cost = 0.0;
        bool accepted = false;
        for (int halvings = 0; halvings <= 30; ++halvings) {
            candidate = theta - alpha * grad;
            new_cost = cross_entropy_cost(candidate, X_aug, y);
            if (std::isfinite(new_cost) && new_cost <= cost) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;  // no acceptable step at any tried rate
        theta = std::move(candidate);
        double delta = cost - new_cost;
        cost = new_cost;
        if (delta < cfg.convergence_tol) break;
    }

    LinearModel m;
    m.weights = std::move(theta);
    m.classes = classes;
    m.space_ref = space_ref;
    return m;
}

Vector sgd_epoch(Vector theta, const Matrix& X_aug, const Vector& targets, double alpha,
                 std::uint64_t seed) {
    if (X_aug.rows() != targets.size()) throw Error("linear: X/targets size mismatch");
    if (theta.size() != X_aug.cols()) throw Error("linear: dimension mismatch");
    std::vector<Index> order(static_cast<std::size_t>(X_aug.rows()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
    SplitMix64 rng(seed);
    shuffle(order, rng);
    for (Index i : order) {
        double h = theta.dot(X_aug.row(i));
        theta -= alpha * (h - targets[i]) * X_aug.row(i).transpose();
    }
    if (!theta.allFinite()) throw Error("linear: non-finite weights (divergent step size)");
    return theta;
}

LinearModel train_sgd(const Matrix& X, const std::vector<int>& y,
                      const std::vector<std::string>& classes, const std::string& space_ref,
                      const GdConfig& cfg) {
    if (cfg.epochs < 1) throw Error("linear: epochs must be >= 1");
    if (cfg.decay_horizon <= 0.0) throw Error("linear: decay horizon must be > 0");
    Matrix X_aug = augmented(X);
    const Index k = static_cast<Index>(classes.size());
    check_labels(X_aug, y, k);

    LinearModel m;
    m.weights = Matrix::Zero(k, X_aug.cols());
    m.classes = classes;
    m.space_ref = space_ref;
    for (Index c = 0; c < k; ++c) {
        Vector targets(X_aug.rows());
        for (std::size_t i = 0; i < y.size(); ++i)
            targets[static_cast<Index>(i)] = y[i] == c ? 1.0 : 0.0;
        Vector theta = Vector::Zero(X_aug.cols());
        for (int t = 0; t < cfg.epochs; ++t) {
            double alpha_t = cfg.alpha / (1.0 + static_cast<double>(t) / cfg.decay_horizon);
            std::uint64_t seed = derive_seed(
                cfg.seed, "sgd|c" + std::to_string(c) + "|epoch|" + std::to_string(t));
            theta = sgd_epoch(std::move(theta), X_aug, targets, alpha_t, seed);
        }
        m.weights.row(c) = theta.transpose();
    }
    return m;
}

Prediction apply_linear(const LinearModel& model, const Vector& x) {
    if (x.size() + 1 != model.weights.cols()) throw Error("linear: feature dimension mismatch");
    Prediction p;
    p.scores = model.weights * augmented(x);
    p.class_index = argmax_first(p.scores);
    return p;
}

} // namespace textclass
