#include "textclass/naive_bayes.hpp"

namespace textclass {

namespace {

// Shared shell of both trainers: per-class document counts and priors.
struct ClassStats {
    std::vector<std::vector<Index>> docs_by_class;
    Vector prior;
};

ClassStats class_stats(const Matrix& X, const std::vector<int>& y,
                       const std::vector<std::string>& classes) {
    if (static_cast<std::size_t>(X.rows()) != y.size())
        throw Error("naive_bayes: X/y size mismatch");
    if (X.rows() == 0) throw Error("naive_bayes: empty training set");
    ClassStats s;
    s.docs_by_class.resize(classes.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0 || static_cast<std::size_t>(y[i]) >= classes.size())
            throw Error("naive_bayes: label index out of range");
        s.docs_by_class[static_cast<std::size_t>(y[i])].push_back(static_cast<Index>(i));
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (s.docs_by_class[c].empty())
            throw Error("naive_bayes: class '" + classes[c] + "' has no training documents");
    s.prior = Vector(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        s.prior[static_cast<Index>(c)] =
            static_cast<double>(s.docs_by_class[c].size()) / static_cast<double>(X.rows());
    return s;
}

} // namespace

NbModel train_multinomial(const Matrix& X, const std::vector<int>& y,
                          const std::vector<std::string>& classes,
                          const std::string& space_ref) {
    ClassStats s = class_stats(X, y, classes);
    NbModel m;
    m.variant = NbModel::Variant::multinomial;
    m.classes = classes;
    m.prior = s.prior;
    m.space_ref = space_ref;
    m.condprob = Matrix(X.cols(), static_cast<Index>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Vector t_ct = Vector::Zero(X.cols());
        for (Index row : s.docs_by_class[c]) t_ct += X.row(row).transpose();
        Vector smoothed = t_ct.array() + 1.0;
        m.condprob.col(static_cast<Index>(c)) = smoothed / smoothed.sum();
    }
    return m;
}

NbModel train_bernoulli(const Matrix& X, const std::vector<int>& y,
                        const std::vector<std::string>& classes,
                        const std::string& space_ref) {
    ClassStats s = class_stats(X, y, classes);
    NbModel m;
    m.variant = NbModel::Variant::bernoulli;
    m.classes = classes;
    m.prior = s.prior;
    m.space_ref = space_ref;
    m.condprob = Matrix(X.cols(), static_cast<Index>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Vector n_ct = Vector::Zero(X.cols());
        for (Index row : s.docs_by_class[c])
            n_ct += (X.row(row).transpose().array() != 0.0).cast<double>().matrix();
        const double n_c = static_cast<double>(s.docs_by_class[c].size());
        m.condprob.col(static_cast<Index>(c)) = (n_ct.array() + 1.0) / (n_c + 2.0);
    }
    return m;
}

Prediction apply_multinomial(const NbModel& model, const Vector& counts) {
    if (model.variant != NbModel::Variant::multinomial)
        throw Error("naive_bayes: model is not multinomial");
    if (counts.size() != model.condprob.rows())
        throw Error("naive_bayes: feature dimension mismatch");
    Prediction p;
    p.scores = model.prior.array().log().matrix() +
               model.condprob.array().log().matrix().transpose() * counts;
    p.class_index = argmax_first(p.scores);
    return p;
}

Prediction apply_bernoulli(const NbModel& model, const Vector& binary) {
    if (model.variant != NbModel::Variant::bernoulli)
        throw Error("naive_bayes: model is not bernoulli");
    if (binary.size() != model.condprob.rows())
        throw Error("naive_bayes: feature dimension mismatch");
    Vector b = (binary.array() != 0.0).cast<double>();
    Prediction p;
    p.scores = model.prior.array().log().matrix() +
               model.condprob.array().log().matrix().transpose() * b +
               (1.0 - model.condprob.array()).log().matrix().transpose() *
                   (1.0 - b.array()).matrix();
    p.class_index = argmax_first(p.scores);
    return p;
}

} // namespace textclass
