#include "textclass/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "textclass/porter.hpp"
#include "textclass/rng.hpp"
#include "textclass/types.hpp"

namespace textclass {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool all_digits(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

// Surface tokens as the tokenizer emits them: lowercase, length >= 2, so
// contractions appear as their split-off pieces (don, ll, ve, ...).
const char* const kBuiltinStopwords[] = {
    "about", "above", "after", "again", "against", "ain", "all", "am", "an",
    "and", "any", "are", "aren", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can",
    "cannot", "could", "couldn", "did", "didn", "do", "does", "doesn",
    "doing", "don", "down", "during", "each", "few", "for", "from",
    "further", "had", "hadn", "has", "hasn", "have", "haven", "having",
    "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
    "if", "in", "into", "is", "isn", "it", "its", "itself", "just", "ll",
    "ma", "me", "mightn", "more", "most", "mustn", "my", "myself", "needn",
    "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or",
    "other", "ought", "our", "ours", "ourselves", "out", "over", "own",
    "re", "same", "shan", "she", "should", "shouldn", "so", "some", "such",
    "than", "that", "the", "their", "theirs", "them", "themselves", "then",
    "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "ve", "very", "was", "wasn", "we", "were",
    "weren", "what", "when", "where", "which", "while", "who", "whom",
    "why", "will", "with", "won", "would", "wouldn", "you", "your",
    "yours", "yourself", "yourselves",
};

std::string hash_words(const std::vector<std::string>& sorted_words) {
    std::string joined;
    for (const auto& w : sorted_words) {
        joined += w;
        joined += '\n';
    }
    return hex64(fnv1a64(joined));
}

} // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.size() >= 2 && !all_digits(cur)) tokens.push_back(cur);
        cur.clear();
    };
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

const Stoplist& Stoplist::builtin() {
    static const Stoplist instance = [] {
        std::vector<std::string> words(std::begin(kBuiltinStopwords), std::end(kBuiltinStopwords));
        return from_words(words);
    }();
    return instance;
}

Stoplist Stoplist::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("stoplist: cannot open '" + path + "'");
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string w = line.substr(start);
        std::transform(w.begin(), w.end(), w.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.push_back(w);
    }
    return from_words(words);
}

Stoplist Stoplist::from_words(const std::vector<std::string>& words) {
    Stoplist s;
    s.words_.insert(words.begin(), words.end());
    std::vector<std::string> sorted(s.words_.begin(), s.words_.end());
    std::sort(sorted.begin(), sorted.end());
    s.version_ = hash_words(sorted);
    return s;
}

std::vector<std::string> Stoplist::sorted_words() const {
    std::vector<std::string> sorted(words_.begin(), words_.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stoplist.contains(t)) out.push_back(t);
    return out;
}

std::vector<std::string> preprocess(const std::string& text, const Stoplist& stoplist) {
    std::vector<std::string> out;
    for (auto& t : tokenize(text)) {
        if (stoplist.contains(t)) continue;
        out.push_back(porter_stem(t));
    }
    return out;
}

} // namespace textclass
