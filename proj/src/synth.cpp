#include "textclass/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "textclass/rng.hpp"
#include "textclass/text.hpp"
#include "textclass/types.hpp"

namespace textclass {
namespace {

// Pronounceable synthetic vocabulary: a pool prefix plus base-20 syllable
// digits of the word id. Distinct ids never collide within a pool.
const char* const kSyllables[20] = {
    "ba", "de", "fi", "go", "hu", "ka", "le", "mi", "no", "pu",
    "ra", "se", "ti", "vo", "wa", "ze", "cha", "dro", "lin", "mon",
};

std::string make_word(const char* prefix, int id) {
    std::string word = prefix;
    int rest = id;
    do {
        word += kSyllables[rest % 20];
        rest /= 20;
    } while (rest > 0);
    return word;
}

std::vector<std::string> make_pool(const char* prefix, int size) {
    std::vector<std::string> pool;
    pool.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pool.push_back(make_word(prefix, i));
    return pool;
}

// Zipf-weighted draw: weight of rank i is 1/(i+2).
class ZipfSampler {
public:
    explicit ZipfSampler(std::size_t size) : cumulative_(size) {
        double total = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            total += 1.0 / static_cast<double>(i + 2);
            cumulative_[i] = total;
        }
    }

    std::size_t draw(SplitMix64& rng) const {
        const double u = rng.next_unit() * cumulative_.back();
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

private:
    std::vector<double> cumulative_;
};

constexpr int kNeutralWords = 600;
constexpr int kMarkedWords = 150;   // per class
constexpr int kPairs = 16;
constexpr int kRareWords = 4000;

} // namespace

LabeledCorpus synth_sentiment_corpus(const SynthConfig& cfg) {
    if (cfg.docs_per_class < 1) throw Error("synth: docs_per_class must be positive");
    if (!(cfg.own_class_affinity > 0.5 && cfg.own_class_affinity < 1.0))
        throw Error("synth: own_class_affinity must lie in (0.5, 1)");

    const std::vector<std::string> function_words = Stoplist::builtin().sorted_words();
    const std::vector<std::string> neutral = make_pool("no", kNeutralWords);
    const std::vector<std::string> marked[2] = {make_pool("pa", kMarkedWords),
                                                make_pool("ne", kMarkedWords)};
    std::vector<std::string> pair_a, pair_b;
    for (int i = 0; i < kPairs; ++i) {
        pair_a.push_back(make_word("xa", i));
        pair_b.push_back(make_word("xe", i));
    }

    const ZipfSampler neutral_zipf(neutral.size());
    const ZipfSampler marked_zipf(kMarkedWords);
    const double q = cfg.own_class_affinity;

    LabeledCorpus corpus;
    corpus.classes = {"neg", "pos"};

    for (int cls = 0; cls < 2; ++cls) {
        for (int d = 0; d < cfg.docs_per_class; ++d) {
            const std::string label =
                "doc|" + corpus.classes[static_cast<std::size_t>(cls)] + "|" + std::to_string(d);
            SplitMix64 rng(derive_seed(cfg.seed, label));

            std::vector<std::string> tokens;
            const int length = 80 + static_cast<int>(rng.next_below(81));
            tokens.reserve(static_cast<std::size_t>(length) + 2 * kPairs + 4);

            // Interaction channel. "pos" favours both-or-neither, "neg"
            // exactly-one; marginal presence is 0.5 per word in both classes.
            for (int p = 0; p < kPairs; ++p) {
                const double u = rng.next_unit();
                bool a, b;
                if (cls == 1) {
                    a = u < 0.38 || (u >= 0.76 && u < 0.88);
                    b = u < 0.38 || u >= 0.88;
                } else {
                    a = u < 0.12 || (u >= 0.24 && u < 0.62);
                    b = u < 0.12 || u >= 0.62;
                }
                if (a) tokens.push_back(pair_a[static_cast<std::size_t>(p)]);
                if (b) tokens.push_back(pair_b[static_cast<std::size_t>(p)]);
            }

            // Rare tail so feature selection has something to cut.
            for (int r = 0; r < 3; ++r)
                tokens.push_back(make_word("ru", static_cast<int>(rng.next_below(kRareWords))));

            for (int t = 0; t < length; ++t) {
                const double u = rng.next_unit();
                if (u < 0.35) {
                    tokens.push_back(function_words[rng.next_below(function_words.size())]);
                } else if (u < 0.75) {
                    tokens.push_back(neutral[neutral_zipf.draw(rng)]);
                } else {
                    const int pool = (rng.next_unit() < q) ? cls : 1 - cls;
                    tokens.push_back(marked[pool][marked_zipf.draw(rng)]);
                }
            }

            shuffle(tokens, rng);

            std::string text;
            for (std::size_t i = 0; i < tokens.size(); ++i) {
                if (i > 0) text += (i % 12 == 0) ? ". " : " ";
                text += tokens[i];
            }
            text += ".\n";

            char name[16];
            std::snprintf(name, sizeof(name), "%04d", d);
            corpus.documents.push_back(
                {corpus.classes[static_cast<std::size_t>(cls)] + "/" + name + ".txt", text});
            corpus.labels.push_back(corpus.classes[static_cast<std::size_t>(cls)]);
        }
    }
    return corpus;
}

void write_dir_per_class(const LabeledCorpus& corpus, const std::string& root) {
    namespace fs = std::filesystem;
    for (const std::string& cls : corpus.classes)
        fs::create_directories(fs::path(root) / cls);
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        const fs::path path = fs::path(root) / corpus.documents[i].id;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("synth: cannot write " + path.string());
        out << corpus.documents[i].text;
        if (!out) throw Error("synth: write failed for " + path.string());
    }
}

} // namespace textclass
