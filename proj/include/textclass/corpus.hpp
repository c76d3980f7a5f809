#ifndef TEXTCLASS_CORPUS_HPP
#define TEXTCLASS_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace textclass {

struct Document {
    std::string id;    // unique within a corpus: relative path or line number
    std::string text;  // UTF-8; may be empty
};

/// Immutable labeled document collection. labels is parallel to documents
/// and holds class names; classes is the ordered unique class list.
struct LabeledCorpus {
    std::vector<Document> documents;
    std::vector<std::string> labels;
    std::vector<std::string> classes;

    std::size_t size() const { return documents.size(); }

    /// Position of documents[doc]'s label within classes.
    int label_index(std::size_t doc) const;

    /// Checks the structural invariants (parallel sizes, >= 2 classes,
    /// unique ids, every label listed in classes); throws Error.
    void validate() const;
};

enum class CorpusFormat { dir_per_class, jsonl };

/// dir_per_class: every subdirectory of path is a class, every regular
/// file inside is one document (id = "class/filename", files and classes
/// sorted by name; dotfiles skipped). jsonl: one {"text","label"} object
/// per line, id = 1-based line number, blank lines skipped. Both formats
/// reject invalid UTF-8; errors name the offending file or line.
LabeledCorpus load_corpus(const std::string& path, CorpusFormat format);

/// Partition fractions kept as exact rationals over a common denominator
/// so the floor arithmetic in split() is integer-exact ("0.6" of 10 docs
/// is exactly 6, never floor(5.999...)).
struct SplitSpec {
    std::int64_t train_num = 3;
    std::int64_t cv_num = 1;
    std::int64_t test_num = 1;
    std::int64_t den = 5;
    std::uint64_t seed = 42;

    /// Parse "0.6,0.2,0.2"-style decimal fractions; they must each be in
    /// (0,1) and sum to exactly 1.
    static SplitSpec parse(const std::string& csv, std::uint64_t seed);
};

struct SplitResult {
    LabeledCorpus train;
    LabeledCorpus cv;
    LabeledCorpus test;
};

/// Stratified split: within each class, documents are shuffled by a
/// generator seeded from (spec.seed, class name) and cut at
/// floor(n*train) and floor(n*(train+cv)). Every class needs >= 3
/// documents. Identical inputs yield identical partitions.
SplitResult split(const LabeledCorpus& corpus, const SplitSpec& spec);

} // namespace textclass

#endif
