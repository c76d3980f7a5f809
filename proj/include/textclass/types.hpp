#ifndef TEXTCLASS_TYPES_HPP
#define TEXTCLASS_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace textclass {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Eigen::Index;

/// Error type thrown by all modules; messages are prefixed with the
/// originating module name ("corpus: ...", "pipeline: ...").
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Prediction {
    int class_index = 0;
    Vector scores;   // per-class scores; meaning depends on the model family
};

/// Argmax with first-index tie-break: the earliest maximal entry wins.
inline int argmax_first(const Vector& v) {
    int best = 0;
    for (int i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

} // namespace textclass

#endif
