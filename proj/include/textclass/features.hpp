#ifndef TEXTCLASS_FEATURES_HPP
#define TEXTCLASS_FEATURES_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "textclass/corpus.hpp"
#include "textclass/text.hpp"
#include "textclass/types.hpp"

namespace textclass {

/// Selected vocabulary plus everything needed to reapply the exact
/// preprocessing that built it. Immutable after construction and safe to
/// share across threads.
struct FeatureSpace {
    std::vector<std::string> terms;               // ranked by DF desc, then lexicographic
    std::unordered_map<std::string, int> index;   // term -> position in terms
    std::vector<double> df;                       // parallel to terms, document fraction in (0,1]
    std::string pipeline_fingerprint;             // hash of (stoplist version, stemmer version, max_features)
    std::size_t max_features = 0;
    Stoplist stoplist;

    Index dim() const { return static_cast<Index>(terms.size()); }

    /// Content hash over pipeline_fingerprint + terms; models store it so
    /// applying a model to vectors from a different space is rejected.
    std::string fingerprint() const;
};

std::string make_pipeline_fingerprint(const std::string& stoplist_version,
                                      const std::string& stemmer_version,
                                      std::size_t max_features);

/// Document frequency of every stem over the training documents (fraction
/// of documents containing it); ranked by DF descending with
/// lexicographic ascending tie-break; top max_features kept. Throws
/// "pipeline: no features" when preprocessing leaves nothing.
FeatureSpace build_feature_space(const LabeledCorpus& train, std::size_t max_features,
                                 const Stoplist& stoplist);

enum class VectorKind { count, binary };

/// count: occurrences of each term in the preprocessed document;
/// binary: presence indicator. Out-of-vocabulary stems are ignored.
Vector vectorize(const Document& doc, const FeatureSpace& space, VectorKind kind);

/// Dense design matrix (documents x terms) with integer label vector.
struct VectorizedDataset {
    Matrix X;
    std::vector<int> y;
    std::vector<std::string> doc_ids;
};

VectorizedDataset vectorize_corpus(const LabeledCorpus& corpus, const FeatureSpace& space,
                                   VectorKind kind);

/// Row-wise L2 normalization; zero rows stay zero. Gradient-trained
/// families consume normalized counts (raw text counts make fixed step
/// sizes diverge); the naive Bayes family consumes raw vectors.
void l2_normalize_rows(Matrix& X);
Vector l2_normalized(const Vector& v);

} // namespace textclass

#endif
