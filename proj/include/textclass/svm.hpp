#ifndef TEXTCLASS_SVM_HPP
#define TEXTCLASS_SVM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "textclass/types.hpp"

namespace textclass {

/// Which landmark similarity the kernel classifier uses. standard is the
/// Gaussian kernel exp(-|d-l|^2 / (2 sigma^2)); literal is the raw score
/// -|d-l| / sigma^2 (not positive definite, kept for fidelity experiments
/// behind --kernel-form literal).
enum class KernelForm { standard, literal };

struct SvmConfig {
    double C = 1.0;
    double sigma = 0.5;
    int epochs = 100;
    std::uint64_t seed = 42;
    KernelForm kernel_form = KernelForm::standard;
    /// Landmark cap: above this many training docs, landmarks are a seeded
    /// uniform subsample (memory bound; documented deviation).
    std::size_t max_landmarks = 5000;
};

struct SvmModel {
    enum class Variant { linear, gaussian };
    Variant variant = Variant::linear;
    std::vector<std::string> classes;
    /// k x (n+1) over [intercept, features] (linear) or k x (L+1) over
    /// [intercept, landmark similarities] (gaussian).
    Matrix weights;
    Matrix landmarks;  // L x n, gaussian only
    double sigma = 0.5;
    KernelForm kernel_form = KernelForm::standard;
    std::string space_ref;
    /// Accepted objective value per epoch per class (training telemetry,
    /// not serialized); non-increasing by construction.
    std::vector<std::vector<double>> objective_log;
};

/// exp(-|d-l|^2 / (2 sigma^2)); in (0,1], exactly 1 iff d == l, symmetric.
double gaussian_kernel(const Vector& d, const Vector& l, double sigma);

/// Length |landmarks|+1: leading intercept 1, then the similarity of d to
/// each landmark row under `form`. The one code path shared by training
/// and inference, so a training document's own-landmark entry is exactly 1
/// under the standard form.
Vector kernel_features(const Vector& d, const Matrix& landmarks, double sigma, KernelForm form);

/// One-vs-rest hinge-loss classifier: per class minimizes
/// (1/2)|theta|^2 + C * sum_i max(0, 1 - y_i theta.d_i) over augmented
/// vectors, by primal subgradient descent with eta_t = s/(lambda t),
/// lambda = 1/(C m). The safeguard halves the step scale s and rewinds the
/// epoch whenever the averaged iterate's objective worsens, so the logged
/// objective sequence is non-increasing; the returned weights are the best
/// averaged iterate. Input rows are raw feature vectors (not augmented).
SvmModel train_linear_svc(const Matrix& X, const std::vector<int>& y,
                          const std::vector<std::string>& classes,
                          const std::string& space_ref, const SvmConfig& cfg);

/// Landmark construction: every training vector becomes a landmark
/// (seeded subsample above cfg.max_landmarks), each document is mapped
/// through kernel_features, then training proceeds exactly as the linear
/// variant in that space.
SvmModel train_svc(const Matrix& X, const std::vector<int>& y,
                   const std::vector<std::string>& classes, const std::string& space_ref,
                   const SvmConfig& cfg);

/// Margins per class (gaussian inputs are mapped through the stored
/// landmarks first); argmax with first-class tie-break.
Prediction svm_predict(const SvmModel& model, const Vector& x);

/// Binary membership rule on a margin: the decision boundary itself is in.
inline bool svm_member(double margin) { return margin >= 0.0; }

} // namespace textclass

#endif
