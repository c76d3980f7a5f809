#include <doctest.h>

#include <string>
#include <vector>

#include "textclass/features.hpp"
#include "textclass/types.hpp"

using namespace textclass;

namespace {

// Tokens here are chosen to be stemmer fixed points and non-stopwords so
// document frequencies can be stated directly.
LabeledCorpus tiny_corpus(const std::vector<std::string>& texts) {
    LabeledCorpus c;
    c.classes = {"a", "b"};
    for (std::size_t i = 0; i < texts.size(); ++i) {
        c.documents.push_back({"d" + std::to_string(i), texts[i]});
        c.labels.push_back(i % 2 == 0 ? "a" : "b");
    }
    return c;
}

} // namespace

TEST_SUITE("features") {

TEST_CASE("document frequency ranks terms, ties broken lexicographically") {
    LabeledCorpus c = tiny_corpus({"cat dog", "cat dog cat", "cat sun", "wug"});
    FeatureSpace space = build_feature_space(c, 100, Stoplist::builtin());

    CHECK(space.terms == std::vector<std::string>{"cat", "dog", "sun", "wug"});
    CHECK(space.df == std::vector<double>{0.75, 0.5, 0.25, 0.25});
    CHECK(space.dim() == 4);
    CHECK(space.index.at("cat") == 0);
    CHECK(space.index.at("wug") == 3);
    for (double f : space.df) {
        CHECK(f > 0.0);
        CHECK(f <= 1.0);
    }
    // repeats within one document count once
    CHECK(space.df[0] == 0.75);
}

TEST_CASE("max_features truncates the ranked list") {
    LabeledCorpus c = tiny_corpus({"cat dog", "cat dog cat", "cat sun", "wug"});
    FeatureSpace top3 = build_feature_space(c, 3, Stoplist::builtin());
    CHECK(top3.terms == std::vector<std::string>{"cat", "dog", "sun"});
    FeatureSpace top2 = build_feature_space(c, 2, Stoplist::builtin());
    CHECK(top2.terms == std::vector<std::string>{"cat", "dog"});
    CHECK(top2.max_features == 2);
}

TEST_CASE("selection sees stemmed, stop-filtered tokens") {
    LabeledCorpus c = tiny_corpus({"the connected cat", "connections and a dog"});
    FeatureSpace space = build_feature_space(c, 100, Stoplist::builtin());
    // "connected" and "connections" collapse to one stem present in both docs
    CHECK(space.terms[0] == "connect");
    CHECK(space.df[0] == 1.0);
    CHECK(space.index.count("the") == 0);
    CHECK(space.index.count("and") == 0);
}

TEST_CASE("vectorize counts or marks presence; OOV ignored") {
    LabeledCorpus c = tiny_corpus({"cat dog", "cat sun", "dog sun"});
    FeatureSpace space = build_feature_space(c, 100, Stoplist::builtin());

    Document doc{"q", "cat cat dog zzz"};
    Vector counts = vectorize(doc, space, VectorKind::count);
    Vector bits = vectorize(doc, space, VectorKind::binary);
    REQUIRE(counts.size() == 3);
    CHECK(counts[space.index.at("cat")] == 2.0);
    CHECK(counts[space.index.at("dog")] == 1.0);
    CHECK(counts[space.index.at("sun")] == 0.0);
    CHECK(bits[space.index.at("cat")] == 1.0);
    CHECK(bits[space.index.at("dog")] == 1.0);
    CHECK(bits[space.index.at("sun")] == 0.0);

    // stemming applies at lookup time too
    Vector stemmed = vectorize({"q2", "connecting connects"},
                               build_feature_space(tiny_corpus({"connected cat", "connect dog"}),
                                                   100, Stoplist::builtin()),
                               VectorKind::count);
    CHECK(stemmed[0] == 2.0); // "connect" has DF 1.0 so it ranks first

    CHECK(vectorize({"q3", ""}, space, VectorKind::count).isZero());
    CHECK(vectorize({"q4", "the of and"}, space, VectorKind::count).isZero());
}

TEST_CASE("vectorize_corpus stacks rows in document order") {
    LabeledCorpus c = tiny_corpus({"cat dog", "cat sun", "dog sun"});
    FeatureSpace space = build_feature_space(c, 100, Stoplist::builtin());
    VectorizedDataset ds = vectorize_corpus(c, space, VectorKind::count);

    REQUIRE(ds.X.rows() == 3);
    REQUIRE(ds.X.cols() == space.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Vector row = vectorize(c.documents[i], space, VectorKind::count);
        CHECK(ds.X.row(static_cast<Index>(i)).transpose().isApprox(row, 0.0));
        CHECK(ds.y[i] == c.label_index(i));
        CHECK(ds.doc_ids[i] == c.documents[i].id);
    }
}

TEST_CASE("fingerprints track pipeline settings and vocabulary") {
    CHECK(make_pipeline_fingerprint("s1", "p1", 2000) == make_pipeline_fingerprint("s1", "p1", 2000));
    CHECK(make_pipeline_fingerprint("s1", "p1", 2000) != make_pipeline_fingerprint("s2", "p1", 2000));
    CHECK(make_pipeline_fingerprint("s1", "p1", 2000) != make_pipeline_fingerprint("s1", "p2", 2000));
    CHECK(make_pipeline_fingerprint("s1", "p1", 2000) != make_pipeline_fingerprint("s1", "p1", 1999));

    LabeledCorpus c = tiny_corpus({"cat dog", "cat dog cat", "cat sun", "wug"});
    FeatureSpace a = build_feature_space(c, 100, Stoplist::builtin());
    FeatureSpace b = build_feature_space(c, 100, Stoplist::builtin());
    CHECK(a.fingerprint() == b.fingerprint());

    // same settings, different vocabulary
    FeatureSpace other = build_feature_space(tiny_corpus({"mud cat", "mud dog"}), 100,
                                             Stoplist::builtin());
    CHECK(other.pipeline_fingerprint == a.pipeline_fingerprint);
    CHECK(other.fingerprint() != a.fingerprint());

    // same vocabulary reachable, different max_features setting
    FeatureSpace wider = build_feature_space(c, 101, Stoplist::builtin());
    CHECK(wider.terms == a.terms);
    CHECK(wider.fingerprint() != a.fingerprint());
}

TEST_CASE("degenerate inputs are rejected") {
    LabeledCorpus empty;
    empty.classes = {"a", "b"};
    CHECK_THROWS_WITH_AS(build_feature_space(empty, 100, Stoplist::builtin()),
                         doctest::Contains("empty training corpus"), Error);

    LabeledCorpus c = tiny_corpus({"cat dog", "cat sun"});
    CHECK_THROWS_WITH_AS(build_feature_space(c, 0, Stoplist::builtin()),
                         doctest::Contains("max_features"), Error);

    LabeledCorpus stopsOnly = tiny_corpus({"the and of", "a an to"});
    CHECK_THROWS_WITH_AS(build_feature_space(stopsOnly, 100, Stoplist::builtin()),
                         doctest::Contains("no features"), Error);
}

TEST_CASE("row normalization yields unit rows, zero rows untouched") {
    Matrix X(3, 2);
    X << 3.0, 4.0,
         0.0, 0.0,
         0.0, 2.0;
    l2_normalize_rows(X);
    CHECK(X(0, 0) == doctest::Approx(0.6));
    CHECK(X(0, 1) == doctest::Approx(0.8));
    CHECK(X.row(1).isZero());
    CHECK(X(2, 1) == doctest::Approx(1.0));
    for (Index i : {0, 2}) CHECK(X.row(i).norm() == doctest::Approx(1.0));

    Vector v(2);
    v << 3.0, 4.0;
    Vector n = l2_normalized(v);
    CHECK(n[0] == doctest::Approx(0.6));
    CHECK(v[0] == 3.0); // input untouched
    CHECK(l2_normalized(Vector::Zero(2)).isZero());
}

} // TEST_SUITE
