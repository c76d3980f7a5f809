#include "textclass/features.hpp"

#include <algorithm>
#include <unordered_set>

#include "textclass/porter.hpp"
#include "textclass/rng.hpp"

namespace textclass {

std::string make_pipeline_fingerprint(const std::string& stoplist_version,
                                      const std::string& stemmer_version,
                                      std::size_t max_features) {
    return hex64(fnv1a64(stoplist_version + "|" + stemmer_version + "|" +
                         std::to_string(max_features)));
}

std::string FeatureSpace::fingerprint() const {
    std::string blob = pipeline_fingerprint;
    for (const auto& t : terms) {
        blob += '\n';
        blob += t;
    }
    return hex64(fnv1a64(blob));
}

FeatureSpace build_feature_space(const LabeledCorpus& train, std::size_t max_features,
                                 const Stoplist& stoplist) {
    if (train.size() == 0) throw Error("pipeline: empty training corpus");
    if (max_features == 0) throw Error("pipeline: max_features must be positive");

    std::unordered_map<std::string, std::int64_t> doc_count;
    for (const auto& doc : train.documents) {
        std::unordered_set<std::string> seen;
        for (auto& stem : preprocess(doc.text, stoplist))
            if (seen.insert(stem).second) ++doc_count[stem];
    }
    if (doc_count.empty()) throw Error("pipeline: no features");

    std::vector<std::pair<std::string, std::int64_t>> ranked(doc_count.begin(), doc_count.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > max_features) ranked.resize(max_features);

    FeatureSpace space;
    space.stoplist = stoplist;
    space.max_features = max_features;
    space.pipeline_fingerprint =
        make_pipeline_fingerprint(stoplist.version(), kStemmerVersion, max_features);
    const double n = static_cast<double>(train.size());
    space.terms.reserve(ranked.size());
    space.df.reserve(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        space.terms.push_back(ranked[i].first);
        space.df.push_back(static_cast<double>(ranked[i].second) / n);
        space.index.emplace(ranked[i].first, static_cast<int>(i));
    }
    return space;
}

Vector vectorize(const Document& doc, const FeatureSpace& space, VectorKind kind) {
    Vector v = Vector::Zero(space.dim());
    for (auto& stem : preprocess(doc.text, space.stoplist)) {
        auto it = space.index.find(stem);
        if (it == space.index.end()) continue;
        if (kind == VectorKind::count)
            v[it->second] += 1.0;
        else
            v[it->second] = 1.0;
    }
    return v;
}

VectorizedDataset vectorize_corpus(const LabeledCorpus& corpus, const FeatureSpace& space,
                                   VectorKind kind) {
    VectorizedDataset ds;
    ds.X = Matrix::Zero(static_cast<Index>(corpus.size()), space.dim());
    ds.y.reserve(corpus.size());
    ds.doc_ids.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        ds.X.row(static_cast<Index>(i)) = vectorize(corpus.documents[i], space, kind).transpose();
        ds.y.push_back(corpus.label_index(i));
        ds.doc_ids.push_back(corpus.documents[i].id);
    }
    return ds;
}

void l2_normalize_rows(Matrix& X) {
    for (Index i = 0; i < X.rows(); ++i) {
        double norm = X.row(i).norm();
        if (norm > 0.0) X.row(i) /= norm;
    }
}

Vector l2_normalized(const Vector& v) {
    double norm = v.norm();
    return norm > 0.0 ? Vector(v / norm) : v;
}

} // namespace textclass
