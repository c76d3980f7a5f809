#ifndef TEXTCLASS_NAIVE_BAYES_HPP
#define TEXTCLASS_NAIVE_BAYES_HPP

#include <string>
#include <vector>

#include "textclass/types.hpp"

namespace textclass {

/// Trained naive Bayes parameters. condprob is |terms| x |classes| with
/// every entry strictly in (0,1); priors sum to 1. Immutable once trained;
/// concurrent application is safe.
struct NbModel {
    enum class Variant { multinomial, bernoulli };
    Variant variant = Variant::multinomial;
    std::vector<std::string> classes;
    Vector prior;      // |classes|
    Matrix condprob;   // |terms| x |classes|
    std::string space_ref;  // fingerprint of the feature space the model expects
};

/// Multinomial training with add-one smoothing:
/// condprob[t][c] = (T_ct + 1) / sum_t'(T_ct' + 1), prior[c] = N_c/N, where
/// T_ct is the total count of term t across class-c documents. X must be
/// count vectors. Every class needs >= 1 document.
NbModel train_multinomial(const Matrix& X, const std::vector<int>& y,
                          const std::vector<std::string>& classes,
                          const std::string& space_ref);

/// Bernoulli training: condprob[t][c] = (N_ct + 1) / (N_c + 2) with N_ct
/// the number of class-c documents containing t. Entries of X are treated
/// as presence indicators (any nonzero counts as present).
NbModel train_bernoulli(const Matrix& X, const std::vector<int>& y,
                        const std::vector<std::string>& classes,
                        const std::string& space_ref);

/// score[c] = log prior[c] + sum_t counts[t] * log condprob[t][c];
/// argmax with first-class tie-break.
Prediction apply_multinomial(const NbModel& model, const Vector& counts);

/// Visits the whole vocabulary: log condprob[t][c] for present terms plus
/// log(1 - condprob[t][c]) for absent ones, on top of the log prior.
/// Nonzero entries of the input count as present.
Prediction apply_bernoulli(const NbModel& model, const Vector& binary);

} // namespace textclass

#endif
