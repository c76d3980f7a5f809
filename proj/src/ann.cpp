#include "textclass/ann.hpp"

#include <cmath>

#include "textclass/metrics.hpp"
#include "textclass/rng.hpp"

namespace textclass {

namespace {

constexpr double kClamp = 1e-12;

Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& z) { return 1.0 / (1.0 + (-z).exp()); }

// Batched forward pass keeping pre-activations for the backward pass.
// A[l] is m x S_{l+1} (activations of layer l+2... index 0 = first hidden),
// Z[l] the matching pre-activations.
struct ForwardBatch {
    std::vector<Eigen::ArrayXXd> Z;  // 3 entries: hidden1, hidden2, output
    std::vector<Eigen::ArrayXXd> A;
};

Eigen::MatrixXd with_bias(const Eigen::ArrayXXd& a) {
    Eigen::MatrixXd out(a.rows(), a.cols() + 1);
    out.col(0).setOnes();
    out.rightCols(a.cols()) = a.matrix();
    return out;
}

ForwardBatch forward_batch(const Network& net, const Matrix& X) {
    if (X.cols() != net.layer_sizes[0]) throw Error("ann: dimension mismatch");
    ForwardBatch fb;
    Eigen::ArrayXXd a = X.array() * net.input_scale;
    for (std::size_t l = 0; l < net.theta.size(); ++l) {
        Eigen::ArrayXXd z = (with_bias(a) * net.theta[l].transpose()).array();
        bool output_layer = l + 1 == net.theta.size();
        if (!output_layer && net.activation == HiddenActivation::gaussian)
            a = (-z.square()).exp();
        else
            a = sigmoid(z);
        fb.Z.push_back(std::move(z));
        fb.A.push_back(a);
    }
    return fb;
}

void check_network(const Network& net) {
    if (net.layer_sizes.size() != 4 || net.theta.size() != 3)
        throw Error("ann: network must have exactly two hidden layers");
    for (std::size_t l = 0; l < 3; ++l) {
        if (net.theta[l].rows() != net.layer_sizes[l + 1] ||
            net.theta[l].cols() != net.layer_sizes[l] + 1)
            throw Error("ann: weight shape mismatch");
    }
}

double penalty(const Network& net, double lambda, Index m) {
    double sq = 0.0;
    for (const auto& th : net.theta) sq += th.rightCols(th.cols() - 1).squaredNorm();
    return lambda / (2.0 * static_cast<double>(m)) * sq;
}

} // namespace

std::vector<Vector> forward(const Network& net, const Vector& x) {
    check_network(net);
    ForwardBatch fb = forward_batch(net, x.transpose());
    std::vector<Vector> acts;
    acts.push_back(x);
    for (const auto& a : fb.A) acts.push_back(a.row(0).transpose().matrix());
    return acts;
}

double ann_cost(const Network& net, const Matrix& X, const Matrix& Y, double lambda) {
    check_network(net);
    if (X.rows() != Y.rows() || X.rows() == 0) throw Error("ann: X/Y size mismatch");
    if (Y.cols() != net.layer_sizes[3]) throw Error("ann: target width mismatch");
    ForwardBatch fb = forward_batch(net, X);
    Eigen::ArrayXXd h = fb.A.back().min(1.0 - kClamp).max(kClamp);
    const double m = static_cast<double>(X.rows());
    double data_term =
        -(Y.array() * h.log() + (1.0 - Y.array()) * (1.0 - h).log()).sum() / m;
    return data_term + penalty(net, lambda, X.rows());
}

std::vector<Matrix> backprop_gradients(const Network& net, const Matrix& X, const Matrix& Y,
                                       double lambda) {
    check_network(net);
    if (X.rows() != Y.rows() || X.rows() == 0) throw Error("ann: X/Y size mismatch");
    if (Y.cols() != net.layer_sizes[3]) throw Error("ann: target width mismatch");
    ForwardBatch fb = forward_batch(net, X);
    const double m = static_cast<double>(X.rows());

    // delta at the output: a - y. Hidden deltas walk back through the
    // non-bias weights and pick up the transfer-function derivative —
    // a(1-a) for sigmoid, -2z exp(-z^2) for gaussian.
    std::vector<Eigen::ArrayXXd> delta(3);
    delta[2] = fb.A[2] - Y.array();
    for (int l = 1; l >= 0; --l) {
        const Matrix& th_next = net.theta[static_cast<std::size_t>(l) + 1];
        Eigen::ArrayXXd back =
            (delta[static_cast<std::size_t>(l) + 1].matrix() *
             th_next.rightCols(th_next.cols() - 1))
                .array();
        const Eigen::ArrayXXd& a = fb.A[static_cast<std::size_t>(l)];
        if (net.activation == HiddenActivation::gaussian)
            back *= -2.0 * fb.Z[static_cast<std::size_t>(l)] * a;
        else
            back *= a * (1.0 - a);
        delta[static_cast<std::size_t>(l)] = std::move(back);
    }

    std::vector<Matrix> D(3);
    for (std::size_t l = 0; l < 3; ++l) {
        Eigen::MatrixXd a_prev =
            l == 0 ? with_bias(X.array() * net.input_scale) : with_bias(fb.A[l - 1]);
        D[l] = (delta[l].matrix().transpose() * a_prev) / m;
        D[l].rightCols(D[l].cols() - 1) +=
            (lambda / m) * net.theta[l].rightCols(net.theta[l].cols() - 1);
    }
    return D;
}

Matrix one_hot(const std::vector<int>& y, int k) {
    Matrix Y = Matrix::Zero(static_cast<Index>(y.size()), k);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0 || y[i] >= k) throw Error("ann: label index out of range");
        Y(static_cast<Index>(i), y[i]) = 1.0;
    }
    return Y;
}

BpnResult train_bpn(const Matrix& X, const std::vector<int>& y, const Matrix& X_cv,
                    const std::vector<int>& y_cv, const std::vector<std::string>& classes,
                    const std::string& space_ref, const BpnConfig& cfg) {
    if (static_cast<std::size_t>(X.rows()) != y.size() || y.empty())
        throw Error("ann: X/y size mismatch");
    if (static_cast<std::size_t>(X_cv.rows()) != y_cv.size() || y_cv.empty())
        throw Error("ann: cv set must be non-empty");
    if (cfg.hidden_sizes.size() != 2 || cfg.hidden_sizes[0] < 1 || cfg.hidden_sizes[1] < 1)
        throw Error("ann: exactly two hidden layers required");
    if (cfg.lambda < 0.0) throw Error("ann: lambda must be >= 0");
    if (cfg.alpha <= 0.0) throw Error("ann: alpha must be > 0");
    if (cfg.patience < 1) throw Error("ann: patience must be >= 1");
    if (cfg.max_epochs < 1) throw Error("ann: max_epochs must be >= 1");
    if (cfg.input_scale <= 0.0) throw Error("ann: input_scale must be > 0");

    const int k = static_cast<int>(classes.size());
    Network net;
    net.layer_sizes = {static_cast<int>(X.cols()), cfg.hidden_sizes[0], cfg.hidden_sizes[1], k};
    net.input_scale = cfg.input_scale;
    net.activation = cfg.activation;
    net.classes = classes;
    net.space_ref = space_ref;
    for (std::size_t l = 0; l < 3; ++l) {
        const int rows = net.layer_sizes[l + 1];
        const int cols = net.layer_sizes[l] + 1;
        double eps = cfg.init_epsilon > 0.0
                         ? cfg.init_epsilon
                         : std::sqrt(6.0) /
                               std::sqrt(static_cast<double>(net.layer_sizes[l] +
                                                             net.layer_sizes[l + 1]));
        SplitMix64 rng(derive_seed(cfg.seed, "bpn|theta|" + std::to_string(l)));
        Matrix th(rows, cols);
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c) th(r, c) = rng.next_symmetric(eps);
        net.theta.push_back(std::move(th));
    }

    Matrix Y = one_hot(y, k);
    std::vector<int> cv_truth = y_cv;

    auto cv_macro_f1 = [&](const Network& n) {
        std::vector<int> preds(static_cast<std::size_t>(X_cv.rows()));
        ForwardBatch fb = forward_batch(n, X_cv);
        for (Index i = 0; i < X_cv.rows(); ++i) {
            Vector out = fb.A[2].row(i).transpose().matrix();
            preds[static_cast<std::size_t>(i)] = argmax_first(out);
        }
        std::vector<ConfusionCounts> counts;
        for (int c = 0; c < k; ++c) counts.push_back(confusion_counts(preds, cv_truth, c));
        return aggregate(counts).macro_f1;
    };

    BpnResult result;
    Network best = net;
    double best_f1 = -1.0;
    int since_improvement = 0;

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        std::vector<Matrix> D = backprop_gradients(net, X, Y, cfg.lambda);
        for (std::size_t l = 0; l < 3; ++l) net.theta[l] -= cfg.alpha * D[l];
        double cost = ann_cost(net, X, Y, cfg.lambda);
        if (!std::isfinite(cost)) throw Error("ann: non-finite cost (divergent alpha)");
        double f1 = cv_macro_f1(net);
        result.log.push_back({cost, f1});
        if (f1 > best_f1) {
            best_f1 = f1;
            best = net;
            since_improvement = 0;
        } else if (++since_improvement >= cfg.patience) {
            break;
        }
    }
    result.net = std::move(best);
    return result;
}

Prediction bpn_predict(const Network& net, const Vector& x) {
    check_network(net);
    if (x.size() != net.layer_sizes[0]) throw Error("ann: feature dimension mismatch");
    ForwardBatch fb = forward_batch(net, x.transpose());
    Prediction p;
    p.scores = fb.A[2].row(0).transpose().matrix();
    p.class_index = argmax_first(p.scores);
    return p;
}

} // namespace textclass
