#ifndef TEXTCLASS_TEXT_HPP
#define TEXTCLASS_TEXT_HPP

#include <string>
#include <unordered_set>
#include <vector>

namespace textclass {

/// Lowercase, split on maximal runs of non-alphanumeric bytes, drop tokens
/// shorter than 2 chars and purely numeric ones. Bytes outside ASCII are
/// treated as separators.
std::vector<std::string> tokenize(const std::string& text);

/// Immutable stop-word set with a content-derived version stamp. The stamp
/// feeds pipeline fingerprints, so two lists with the same words are
/// interchangeable regardless of where they were loaded from.
class Stoplist {
public:
    /// Built-in English list (~150 surface tokens, as the tokenizer emits
    /// them). Mirrored verbatim in data/stopwords_en.txt.
    static const Stoplist& builtin();

    /// Load a one-word-per-line UTF-8 file; words are lowercased, blank
    /// lines ignored. Throws Error on unreadable files.
    static Stoplist from_file(const std::string& path);

    static Stoplist from_words(const std::vector<std::string>& words);

    bool contains(const std::string& token) const { return words_.count(token) != 0; }
    std::size_t size() const { return words_.size(); }

    /// Hex hash of the sorted word list.
    const std::string& version() const { return version_; }

    std::vector<std::string> sorted_words() const;

private:
    std::unordered_set<std::string> words_;
    std::string version_;
};

/// Order-preserving filter: drops exactly the tokens present in the list.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist);

/// Full preprocessing chain: tokenize, drop stop words, stem every
/// surviving token. Pure and stateless.
std::vector<std::string> preprocess(const std::string& text, const Stoplist& stoplist);

} // namespace textclass

#endif
