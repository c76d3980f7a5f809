#ifndef TEXTCLASS_ANN_HPP
#define TEXTCLASS_ANN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "textclass/types.hpp"

namespace textclass {

enum class HiddenActivation { sigmoid, gaussian };

struct BpnConfig {
    std::vector<int> hidden_sizes = {64, 32};
    double lambda = 1e-4;
    double alpha = 0.3;
    int max_epochs = 400;
    int patience = 60;    // epochs without cv macro-F1 improvement before stopping
    double init_epsilon = 0.0;  // <= 0 means auto: sqrt(6)/sqrt(S_l + S_{l+1}) per matrix
    // Inputs are multiplied by this before the first layer. Unit-norm
    // document vectors spread mass over ~X nonzero terms, so per-feature
    // variance is far below the ~1 the epsilon-init above assumes; scaling
    // by roughly sqrt(typical nonzero count) restores it. Stored in the
    // network, so callers always pass unscaled vectors.
    double input_scale = 8.0;
    HiddenActivation activation = HiddenActivation::sigmoid;
    std::uint64_t seed = 42;
};

/// Feedforward network with exactly two hidden layers. theta[l] has shape
/// S_{l+1} x (S_l + 1) with the bias weight in column 0. Hidden layers use
/// the configured transfer function — sigmoid 1/(1+e^-z) or gaussian
/// exp(-z^2) — and the output layer is always sigmoid.
struct Network {
    std::vector<int> layer_sizes;  // [n_in, S2, S3, n_out]
    std::vector<Matrix> theta;     // 3 matrices
    double input_scale = 1.0;      // multiplies x before the first layer
    HiddenActivation activation = HiddenActivation::sigmoid;
    std::vector<std::string> classes;
    std::string space_ref;
};

/// Activations a1..a4 for one input (a1 = x, without bias entries).
std::vector<Vector> forward(const Network& net, const Vector& x);

/// Regularized cross-entropy over one-hot targets Y (m x n_out):
/// -(1/m) sum [c log h + (1-c) log(1-h)] + (lambda/2m) sum non-bias
/// weights squared. Outputs are clamped to [1e-12, 1-1e-12] before logs.
double ann_cost(const Network& net, const Matrix& X, const Matrix& Y, double lambda);

/// Averaged, regularized gradients: D[l] = Delta[l]/m, plus (lambda/m) *
/// theta on non-bias columns (the exact gradient of ann_cost). delta at
/// the output is a - y; hidden deltas carry the transfer-function
/// derivative.
std::vector<Matrix> backprop_gradients(const Network& net, const Matrix& X, const Matrix& Y,
                                       double lambda);

struct BpnEpoch {
    double cost = 0.0;
    double cv_macro_f1 = 0.0;
};

struct BpnResult {
    Network net;                 // best cv macro-F1 snapshot
    std::vector<BpnEpoch> log;   // one entry per epoch actually run
};

/// Full-batch descent theta -= alpha * D from uniform [-eps, eps] seeded
/// init (row-major fill order is part of the determinism contract). After
/// each epoch the cv macro-F1 is scored; stops at max_epochs or when it
/// has not improved for `patience` epochs. X rows are feature vectors,
/// y/ycv are 0-based class indices.
BpnResult train_bpn(const Matrix& X, const std::vector<int>& y, const Matrix& X_cv,
                    const std::vector<int>& y_cv, const std::vector<std::string>& classes,
                    const std::string& space_ref, const BpnConfig& cfg);

/// Argmax over output activations, first-class tie-break; the activations
/// ride along as the score vector.
Prediction bpn_predict(const Network& net, const Vector& x);

/// One-hot target matrix (m x k) from 0-based labels.
Matrix one_hot(const std::vector<int>& y, int k);

} // namespace textclass

#endif
