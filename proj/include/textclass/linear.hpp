#ifndef TEXTCLASS_LINEAR_HPP
#define TEXTCLASS_LINEAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "textclass/types.hpp"

namespace textclass {

/// Shared settings for the gradient-trained linear learners. decay_horizon
/// is the T of the per-example learner's schedule alpha_t = alpha/(1+t/T);
/// the softmax learner ignores it.
struct GdConfig {
    double alpha = 0.1;
    int epochs = 200;
    double decay_horizon = 10.0;
    std::uint64_t seed = 42;
    double convergence_tol = 1e-9;
};

/// Prepend an intercept column/entry of ones.
Matrix augmented(const Matrix& X);
Vector augmented(const Vector& x);

/// Softmax over theta*d with max-subtraction; theta is k x (n+1), d is an
/// augmented vector with leading 1. Output entries are in (0,1) and sum to
/// 1 within 1e-12.
Vector softmax_probabilities(const Matrix& theta, const Vector& d_aug);

/// Unregularized cross-entropy J = -(1/m) sum_i log p_{y_i}(d_i) over
/// augmented rows of X_aug with 0-based labels y.
double cross_entropy_cost(const Matrix& theta, const Matrix& X_aug, const std::vector<int>& y);

/// Gradient of the cost above; row j = -(1/m) sum_i d_i (1{y_i=j} - p_j(d_i)).
Matrix cross_entropy_gradient(const Matrix& theta, const Matrix& X_aug,
                              const std::vector<int>& y);

struct LinearModel {
    Matrix weights;  // k x (n+1), column 0 intercept
    std::vector<std::string> classes;
    std::string space_ref;
};

/// Batch gradient descent from zeros. When a step raises the cost the
/// learning rate is halved and the step retried (at most 30 halvings per
/// step; the halved rate persists), so the accepted-cost sequence is
/// non-increasing. Stops early when |dJ| < convergence_tol. Input rows are
/// NOT augmented; the intercept column is added internally.
LinearModel train_logistic(const Matrix& X, const std::vector<int>& y,
                           const std::vector<std::string>& classes,
                           const std::string& space_ref, const GdConfig& cfg);

/// One pass of the per-example least-mean-squares learner: shuffle with a
/// generator seeded by `seed`, then for each example apply
/// theta -= alpha * (theta . d - target) * d. Pure function of its inputs.
Vector sgd_epoch(Vector theta, const Matrix& X_aug, const Vector& targets, double alpha,
                 std::uint64_t seed);

/// One-vs-rest composition of sgd_epoch: one weight row per class with
/// {0,1} targets, learning rate alpha/(1 + t/T) at 0-based epoch t,
/// per-epoch seeds derived from (cfg.seed, class index, epoch).
LinearModel train_sgd(const Matrix& X, const std::vector<int>& y,
                      const std::vector<std::string>& classes, const std::string& space_ref,
                      const GdConfig& cfg);

/// Scores = weights * augmented(x); argmax with first-class tie-break.
/// For the softmax learner the scores are logits; rank order equals
/// probability order.
Prediction apply_linear(const LinearModel& model, const Vector& x);

} // namespace textclass

#endif
