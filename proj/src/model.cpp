#include "textclass/model.hpp"

namespace textclass {

const std::vector<ModelKind>& base_kinds() {
    static const std::vector<ModelKind> kinds = {
        ModelKind::mnb, ModelKind::bnb,    ModelKind::lr,  ModelKind::sgd,
        ModelKind::svc, ModelKind::linsvc, ModelKind::bpn,
    };
    return kinds;
}

std::string kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::mnb: return "mnb";
        case ModelKind::bnb: return "bnb";
        case ModelKind::lr: return "lr";
        case ModelKind::sgd: return "sgd";
        case ModelKind::svc: return "svc";
        case ModelKind::linsvc: return "linsvc";
        case ModelKind::bpn: return "bpn";
        case ModelKind::voted: return "voted";
    }
    throw Error("model: unknown kind");
}

ModelKind kind_from_name(const std::string& name) {
    for (ModelKind k : base_kinds())
        if (kind_name(k) == name) return k;
    if (name == "voted") return ModelKind::voted;
    throw Error("model: unknown model '" + name + "'");
}

const std::vector<std::string>& BaseModel::classes() const {
    switch (kind) {
        case ModelKind::mnb:
        case ModelKind::bnb: return nb.classes;
        case ModelKind::lr:
        case ModelKind::sgd: return linear.classes;
        case ModelKind::svc:
        case ModelKind::linsvc: return svm.classes;
        case ModelKind::bpn: return net.classes;
        default: throw Error("model: not a base model");
    }
}

const std::string& BaseModel::space_ref() const {
    switch (kind) {
        case ModelKind::mnb:
        case ModelKind::bnb: return nb.space_ref;
        case ModelKind::lr:
        case ModelKind::sgd: return linear.space_ref;
        case ModelKind::svc:
        case ModelKind::linsvc: return svm.space_ref;
        case ModelKind::bpn: return net.space_ref;
        default: throw Error("model: not a base model");
    }
}

Prediction base_predict(const BaseModel& model, const Vector& counts) {
    switch (model.kind) {
        case ModelKind::mnb: return apply_multinomial(model.nb, counts);
        case ModelKind::bnb: return apply_bernoulli(model.nb, counts);
        case ModelKind::lr:
        case ModelKind::sgd: return apply_linear(model.linear, l2_normalized(counts));
        case ModelKind::svc:
        case ModelKind::linsvc: return svm_predict(model.svm, l2_normalized(counts));
        case ModelKind::bpn: return bpn_predict(model.net, l2_normalized(counts));
        default: throw Error("model: not a base model");
    }
}

const std::vector<std::string>& TrainedModel::classes() const {
    if (kind == ModelKind::voted) {
        if (voted.members.empty()) throw Error("model: empty ensemble");
        return voted.members.front().classes();
    }
    return base.classes();
}

const std::string& TrainedModel::space_ref() const {
    if (kind == ModelKind::voted) {
        if (voted.members.empty()) throw Error("model: empty ensemble");
        return voted.members.front().space_ref();
    }
    return base.space_ref();
}

Prediction model_predict(const TrainedModel& model, const Vector& counts) {
    if (model.kind != ModelKind::voted) return base_predict(model.base, counts);

    std::vector<int> member_preds;
    member_preds.reserve(model.voted.members.size());
    for (const auto& member : model.voted.members)
        member_preds.push_back(base_predict(member, counts).class_index);

    EnsembleSpec spec;
    spec.tie_break = model.voted.tie_break;
    spec.cv_f1_scores = model.voted.cv_f1;
    Prediction p;
    p.class_index = vote(member_preds, spec);
    p.scores = Vector::Zero(static_cast<Index>(model.classes().size()));
    for (int pred : member_preds) p.scores[pred] += 1.0;
    return p;
}

void TrainOptions::set_seed(std::uint64_t seed) {
    lr.seed = seed;
    sgd.seed = seed;
    svc.seed = seed;
    linsvc.seed = seed;
    bpn.seed = seed;
}

namespace {

BaseModel train_base(ModelKind kind, const Matrix& X_counts, const std::vector<int>& y,
                     const Matrix& Xcv_counts, const std::vector<int>& y_cv,
                     const std::vector<std::string>& classes, const std::string& space_ref,
                     const TrainOptions& opt, std::vector<BpnEpoch>* bpn_log) {
    BaseModel m;
    m.kind = kind;
    switch (kind) {
        case ModelKind::mnb:
            m.nb = train_multinomial(X_counts, y, classes, space_ref);
            return m;
        case ModelKind::bnb: {
            Matrix X_bin = (X_counts.array() != 0.0).cast<double>();
            m.nb = train_bernoulli(X_bin, y, classes, space_ref);
            return m;
        }
        default: break;
    }

    Matrix X_norm = X_counts;
    l2_normalize_rows(X_norm);
    switch (kind) {
        case ModelKind::lr:
            m.linear = train_logistic(X_norm, y, classes, space_ref, opt.lr);
            return m;
        case ModelKind::sgd:
            m.linear = train_sgd(X_norm, y, classes, space_ref, opt.sgd);
            return m;
        case ModelKind::svc:
            m.svm = train_svc(X_norm, y, classes, space_ref, opt.svc);
            return m;
        case ModelKind::linsvc:
            m.svm = train_linear_svc(X_norm, y, classes, space_ref, opt.linsvc);
            return m;
        case ModelKind::bpn: {
            Matrix Xcv_norm = Xcv_counts;
            l2_normalize_rows(Xcv_norm);
            BpnResult res =
                train_bpn(X_norm, y, Xcv_norm, y_cv, classes, space_ref, opt.bpn);
            if (bpn_log) *bpn_log = res.log;
            m.net = std::move(res.net);
            return m;
        }
        default: throw Error("model: not a base model kind");
    }
}

double member_cv_macro_f1(const BaseModel& member, const Matrix& Xcv_counts,
                          const std::vector<int>& y_cv, std::size_t n_classes) {
    std::vector<int> preds;
    preds.reserve(y_cv.size());
    for (Index i = 0; i < Xcv_counts.rows(); ++i)
        preds.push_back(base_predict(member, Xcv_counts.row(i).transpose()).class_index);
    std::vector<ConfusionCounts> counts;
    for (std::size_t c = 0; c < n_classes; ++c)
        counts.push_back(confusion_counts(preds, y_cv, static_cast<int>(c)));
    return aggregate(counts).macro_f1;
}

} // namespace

TrainedModel train_model(ModelKind kind, const Matrix& X_counts, const std::vector<int>& y,
                         const Matrix& Xcv_counts, const std::vector<int>& y_cv,
                         const std::vector<std::string>& classes, const std::string& space_ref,
                         const TrainOptions& opt, std::vector<BpnEpoch>* bpn_log) {
    TrainedModel model;
    model.kind = kind;
    if (kind != ModelKind::voted) {
        model.base =
            train_base(kind, X_counts, y, Xcv_counts, y_cv, classes, space_ref, opt, bpn_log);
        return model;
    }
    if (y_cv.empty())
        throw Error("model: the voted ensemble needs a non-empty cv partition");
    model.voted.tie_break = opt.tie_break;
    for (ModelKind member_kind : base_kinds()) {
        BaseModel member = train_base(member_kind, X_counts, y, Xcv_counts, y_cv, classes,
                                      space_ref, opt, bpn_log);
        model.voted.cv_f1.push_back(
            member_cv_macro_f1(member, Xcv_counts, y_cv, classes.size()));
        model.voted.members.push_back(std::move(member));
    }
    return model;
}

EvaluationReport evaluate_model(const TrainedModel& model, const LabeledCorpus& corpus,
                                const FeatureSpace& space, const std::string& model_name,
                                const std::string& dataset_name, std::uint64_t seed) {
    if (corpus.size() == 0) throw Error("eval: empty dataset");
    if (model.space_ref() != space.fingerprint())
        throw Error("eval: model was trained on a different feature space");
    if (corpus.classes != model.classes())
        throw Error("eval: corpus classes do not match the model's class list");
    std::vector<int> preds, truth;
    preds.reserve(corpus.size());
    truth.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Vector counts = vectorize(corpus.documents[i], space, VectorKind::count);
        preds.push_back(model_predict(model, counts).class_index);
        truth.push_back(corpus.label_index(i));
    }
    return build_report(model_name, dataset_name, seed, preds, truth, model.classes());
}

} // namespace textclass
