#ifndef TEXTCLASS_MODEL_HPP
#define TEXTCLASS_MODEL_HPP

#include <string>
#include <vector>

#include "textclass/ann.hpp"
#include "textclass/ensemble.hpp"
#include "textclass/features.hpp"
#include "textclass/linear.hpp"
#include "textclass/metrics.hpp"
#include "textclass/naive_bayes.hpp"
#include "textclass/svm.hpp"
#include "textclass/types.hpp"

namespace textclass {

enum class ModelKind { mnb, bnb, lr, sgd, svc, linsvc, bpn, voted };

/// The seven base kinds in their fixed member order for the voted model.
const std::vector<ModelKind>& base_kinds();

std::string kind_name(ModelKind kind);
ModelKind kind_from_name(const std::string& name);

/// One trained non-ensemble classifier. Exactly the member matching
/// `kind` is populated.
struct BaseModel {
    ModelKind kind = ModelKind::mnb;
    NbModel nb;
    LinearModel linear;
    SvmModel svm;
    Network net;

    const std::vector<std::string>& classes() const;
    const std::string& space_ref() const;
};

/// Every model consumes the same representation: the raw count vector of
/// a document in the model's feature space. The per-family transform is
/// internal — naive Bayes sees raw counts / presence, the gradient-trained
/// families see the L2-normalized counts they were trained on.
Prediction base_predict(const BaseModel& model, const Vector& counts);

struct VotedModel {
    std::vector<BaseModel> members;  // base_kinds() order
    std::vector<double> cv_f1;       // per-member cv macro-F1
    TieBreak tie_break = TieBreak::best_cv_f1;
};

struct TrainedModel {
    ModelKind kind = ModelKind::mnb;
    BaseModel base;    // kind != voted
    VotedModel voted;  // kind == voted

    const std::vector<std::string>& classes() const;
    const std::string& space_ref() const;
};

/// For the voted model the score vector holds per-class vote counts.
Prediction model_predict(const TrainedModel& model, const Vector& counts);

/// Hyperparameters for every trainable family; the runner copies the run
/// seed into each sub-config.
struct TrainOptions {
    GdConfig lr{0.5, 500, 10.0, 42, 1e-9};
    GdConfig sgd{0.1, 200, 10.0, 42, 1e-9};
    SvmConfig svc;
    SvmConfig linsvc;
    BpnConfig bpn;
    TieBreak tie_break = TieBreak::best_cv_f1;

    void set_seed(std::uint64_t seed);
};

/// Train one model. X matrices are raw count vectors; cv is used by the
/// network's early stopping and for the voted model's member cv scores
/// (and may be empty for other kinds). bpn_log, when non-null, receives
/// the network's per-epoch (cost, cv macro-F1) curve.
TrainedModel train_model(ModelKind kind, const Matrix& X_counts, const std::vector<int>& y,
                         const Matrix& Xcv_counts, const std::vector<int>& y_cv,
                         const std::vector<std::string>& classes, const std::string& space_ref,
                         const TrainOptions& opt, std::vector<BpnEpoch>* bpn_log = nullptr);

/// Classify every document of the corpus (vectorized in `space`) and
/// assemble the report. Throws when the model was trained on a different
/// feature space.
EvaluationReport evaluate_model(const TrainedModel& model, const LabeledCorpus& corpus,
                                const FeatureSpace& space, const std::string& model_name,
                                const std::string& dataset_name, std::uint64_t seed);

} // namespace textclass

#endif
