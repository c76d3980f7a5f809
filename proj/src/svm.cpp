#include "textclass/svm.hpp"

#include <algorithm>
#include <cmath>

#include "textclass/linear.hpp"
#include "textclass/rng.hpp"

namespace textclass {

double gaussian_kernel(const Vector& d, const Vector& l, double sigma) {
    if (d.size() != l.size()) throw Error("svm: dimension mismatch");
    if (sigma <= 0.0) throw Error("svm: sigma must be > 0");
    return std::exp(-(d - l).squaredNorm() / (2.0 * sigma * sigma));
}

Vector kernel_features(const Vector& d, const Matrix& landmarks, double sigma, KernelForm form) {
    if (landmarks.rows() == 0) throw Error("svm: empty landmark list");
    if (landmarks.cols() != d.size()) throw Error("svm: dimension mismatch");
    if (sigma <= 0.0) throw Error("svm: sigma must be > 0");
    Vector out(landmarks.rows() + 1);
    out[0] = 1.0;
    Vector sq = (landmarks.rowwise() - d.transpose()).rowwise().squaredNorm();
    if (form == KernelForm::standard)
        out.tail(landmarks.rows()) = (-sq.array() / (2.0 * sigma * sigma)).exp();
    else
        out.tail(landmarks.rows()) = -sq.array().sqrt() / (sigma * sigma);
    return out;
}

namespace {

// Literal one-vs-rest objective over augmented vectors.
double hinge_objective(const Vector& theta, const Matrix& X_aug, const Vector& ysign, double C) {
    Vector margins = X_aug * theta;
    double hinge = 0.0;
    for (Index i = 0; i < margins.size(); ++i)
        hinge += std::max(0.0, 1.0 - ysign[i] * margins[i]);
    return 0.5 * theta.squaredNorm() + C * hinge;
}

struct BinaryResult {
    Vector weights;
    std::vector<double> objective_log;
};

// Primal subgradient descent on the hinge objective with the decaying step
// eta_t = 1/(lambda t) over per-epoch seeded shuffles. After each epoch the
// mean of that epoch's iterates is scored (suffix averaging, so the
// large-step transient of the first updates never lingers in a candidate)
// and adopted only when it improves on the best objective seen, which makes
// the recorded objective log non-increasing by construction and the
// returned weights the last recorded candidate.
BinaryResult pegasos_binary(const Matrix& X_aug, const Vector& ysign, const SvmConfig& cfg,
                            std::uint64_t class_seed) {
    const Index m = X_aug.rows();
    const double lambda = 1.0 / (cfg.C * static_cast<double>(m));
    Vector theta = Vector::Zero(X_aug.cols());
    std::uint64_t steps = 0;  // global 1-based step counter feeds eta_t

    BinaryResult best;
    best.weights = theta;
    double best_obj = hinge_objective(theta, X_aug, ysign, cfg.C);

    std::vector<Index> order(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        SplitMix64 rng(derive_seed(class_seed, "epoch|" + std::to_string(epoch)));
        shuffle(order, rng);
        Vector avg = Vector::Zero(X_aug.cols());
        double taken = 0.0;
        for (Index i : order) {
            ++steps;
            double eta = 1.0 / (lambda * static_cast<double>(steps));
            double margin = ysign[i] * theta.dot(X_aug.row(i));
            theta *= (1.0 - eta * lambda);
            if (margin < 1.0) theta += eta * ysign[i] * X_aug.row(i).transpose();
            avg += (theta - avg) / ++taken;
        }
        double obj = hinge_objective(avg, X_aug, ysign, cfg.C);
        if (!std::isfinite(obj) || obj > best_obj) continue;
        best_obj = obj;
        best.weights = std::move(avg);
        best.objective_log.push_back(obj);
    }
    if (!best.weights.allFinite()) throw Error("svm: non-finite weights");
    if (best.objective_log.empty()) best.objective_log.push_back(best_obj);
    return best;
}

SvmModel train_common(const Matrix& X_aug, const std::vector<int>& y,
                      const std::vector<std::string>& classes, const SvmConfig& cfg,
                      const char* seed_label) {
    if (static_cast<std::size_t>(X_aug.rows()) != y.size())
        throw Error("svm: X/y size mismatch");
    if (y.empty()) throw Error("svm: empty training data");
    if (cfg.C <= 0.0) throw Error("svm: C must be > 0");
    if (cfg.epochs < 1) throw Error("svm: epochs must be >= 1");
    const Index k = static_cast<Index>(classes.size());
    for (int label : y)
        if (label < 0 || label >= k) throw Error("svm: label index out of range");

    SvmModel model;
    model.classes = classes;
    model.weights = Matrix::Zero(k, X_aug.cols());
    for (Index c = 0; c < k; ++c) {
        Vector ysign(X_aug.rows());
        for (std::size_t i = 0; i < y.size(); ++i)
            ysign[static_cast<Index>(i)] = y[i] == c ? 1.0 : -1.0;
        std::uint64_t class_seed =
            derive_seed(cfg.seed, std::string(seed_label) + "|c" + std::to_string(c));
        BinaryResult res = pegasos_binary(X_aug, ysign, cfg, class_seed);
        model.weights.row(c) = res.weights.transpose();
        model.objective_log.push_back(std::move(res.objective_log));
    }
    return model;
}

} // namespace

SvmModel train_linear_svc(const Matrix& X, const std::vector<int>& y,
                          const std::vector<std::string>& classes,
                          const std::string& space_ref, const SvmConfig& cfg) {
    SvmModel model = train_common(augmented(X), y, classes, cfg, "linsvc");
    model.variant = SvmModel::Variant::linear;
    model.space_ref = space_ref;
    model.sigma = cfg.sigma;
    model.kernel_form = cfg.kernel_form;
    return model;
}

SvmModel train_svc(const Matrix& X, const std::vector<int>& y,
                   const std::vector<std::string>& classes, const std::string& space_ref,
                   const SvmConfig& cfg) {
    if (cfg.sigma <= 0.0) throw Error("svm: sigma must be > 0");
    if (X.rows() == 0) throw Error("svm: empty training data");

    // Landmarks = the training vectors themselves, subsampled with the run
    // seed when the corpus exceeds the cap; original row order kept.
    Matrix landmarks;
    if (static_cast<std::size_t>(X.rows()) > cfg.max_landmarks) {
        std::vector<Index> idx(static_cast<std::size_t>(X.rows()));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Index>(i);
        SplitMix64 rng(derive_seed(cfg.seed, "svc|landmarks"));
        shuffle(idx, rng);
        idx.resize(cfg.max_landmarks);
        std::sort(idx.begin(), idx.end());
        landmarks = Matrix(static_cast<Index>(idx.size()), X.cols());
        for (std::size_t i = 0; i < idx.size(); ++i)
            landmarks.row(static_cast<Index>(i)) = X.row(idx[i]);
    } else {
        landmarks = X;
    }

    Matrix K(X.rows(), landmarks.rows() + 1);
    for (Index i = 0; i < X.rows(); ++i)
        K.row(i) = kernel_features(X.row(i), landmarks, cfg.sigma, cfg.kernel_form).transpose();

    SvmModel model = train_common(K, y, classes, cfg, "svc");
    model.variant = SvmModel::Variant::gaussian;
    model.landmarks = std::move(landmarks);
    model.sigma = cfg.sigma;
    model.kernel_form = cfg.kernel_form;
    model.space_ref = space_ref;
    return model;
}

Prediction svm_predict(const SvmModel& model, const Vector& x) {
    Vector phi;
    if (model.variant == SvmModel::Variant::linear) {
        if (x.size() + 1 != model.weights.cols()) throw Error("svm: feature dimension mismatch");
        phi = augmented(x);
    } else {
        if (x.size() != model.landmarks.cols()) throw Error("svm: feature dimension mismatch");
        phi = kernel_features(x, model.landmarks, model.sigma, model.kernel_form);
    }
    Prediction p;
    p.scores = model.weights * phi;
    p.class_index = argmax_first(p.scores);
    return p;
}

} // namespace textclass
