#include "textclass/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "textclass/rng.hpp"
#include "textclass/types.hpp"

namespace fs = std::filesystem;

namespace textclass {

namespace {

bool valid_utf8(const std::string& s) {
    std::size_t i = 0, n = s.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) { ++i; continue; }
        int len;
        std::uint32_t cp;
        if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1Fu; }
        else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0Fu; }
        else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07u; }
        else return false;
        if (i + static_cast<std::size_t>(len) > n) return false;
        for (int k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3Fu);
        }
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) return false;
        if (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) return false;
        i += static_cast<std::size_t>(len);
    }
    return true;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("corpus: cannot read file '" + p.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

LabeledCorpus load_dir_per_class(const fs::path& root) {
    std::vector<std::string> class_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        std::string name = entry.path().filename().string();
        if (!name.empty() && name[0] != '.') class_dirs.push_back(name);
    }
    std::sort(class_dirs.begin(), class_dirs.end());
    if (class_dirs.size() < 2)
        throw Error("corpus: fewer than 2 classes under '" + root.string() + "'");

    LabeledCorpus corpus;
    corpus.classes = class_dirs;
    for (const auto& cls : class_dirs) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(root / cls)) {
            if (!entry.is_regular_file()) continue;
            std::string name = entry.path().filename().string();
            if (!name.empty() && name[0] != '.') files.push_back(name);
        }
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw Error("corpus: class directory '" + cls + "' has no documents");
        for (const auto& f : files) {
            std::string text = read_file(root / cls / f);
            if (!valid_utf8(text))
                throw Error("corpus: file '" + (root / cls / f).string() + "' is not valid UTF-8");
            corpus.documents.push_back({cls + "/" + f, std::move(text)});
            corpus.labels.push_back(cls);
        }
    }
    return corpus;
}

LabeledCorpus load_jsonl(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("corpus: cannot read file '" + path.string() + "'");
    LabeledCorpus corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!valid_utf8(line))
            throw Error("corpus: line " + std::to_string(lineno) + ": not valid UTF-8");
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded())
            throw Error("corpus: line " + std::to_string(lineno) + ": malformed JSON record");
        if (!rec.is_object() || !rec.contains("text") || !rec.contains("label") ||
            !rec["text"].is_string() || !rec["label"].is_string())
            throw Error("corpus: line " + std::to_string(lineno) +
                        ": record must be an object with string fields 'text' and 'label'");
        corpus.documents.push_back({std::to_string(lineno), rec["text"].get<std::string>()});
        corpus.labels.push_back(rec["label"].get<std::string>());
    }
    std::vector<std::string> classes(corpus.labels.begin(), corpus.labels.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.size() < 2)
        throw Error("corpus: fewer than 2 classes in '" + path.string() + "'");
    corpus.classes = std::move(classes);
    return corpus;
}

} // namespace

int LabeledCorpus::label_index(std::size_t doc) const {
    const std::string& label = labels.at(doc);
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) throw Error("corpus: label '" + label + "' not in class list");
    return static_cast<int>(it - classes.begin());
}

void LabeledCorpus::validate() const {
    if (documents.size() != labels.size())
        throw Error("corpus: documents/labels size mismatch");
    if (classes.size() < 2) throw Error("corpus: fewer than 2 classes");
    std::unordered_set<std::string> ids;
    for (const auto& d : documents) {
        if (d.id.empty()) throw Error("corpus: empty document id");
        if (!ids.insert(d.id).second) throw Error("corpus: duplicate document id '" + d.id + "'");
    }
    std::unordered_set<std::string> cls(classes.begin(), classes.end());
    for (const auto& l : labels)
        if (!cls.count(l)) throw Error("corpus: label '" + l + "' not in class list");
}

LabeledCorpus load_corpus(const std::string& path, CorpusFormat format) {
    fs::path p(path);
    if (!fs::exists(p)) throw Error("corpus: path '" + path + "' does not exist");
    LabeledCorpus corpus =
        format == CorpusFormat::dir_per_class ? load_dir_per_class(p) : load_jsonl(p);
    corpus.validate();
    return corpus;
}

SplitSpec SplitSpec::parse(const std::string& csv, std::uint64_t seed) {
    std::vector<std::pair<std::int64_t, std::int64_t>> fracs; // num/den
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t dot = part.find('.');
        std::string whole = dot == std::string::npos ? part : part.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : part.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw Error("corpus: bad split fraction '" + part + "'");
        for (char c : whole + frac)
            if (c < '0' || c > '9') throw Error("corpus: bad split fraction '" + part + "'");
        if (frac.size() > 9) throw Error("corpus: split fraction '" + part + "' has too many digits");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                           (frac.empty() ? 0 : std::stoll(frac));
        fracs.emplace_back(num, den);
    }
    if (fracs.size() != 3)
        throw Error("corpus: split must have exactly 3 comma-separated fractions");
    std::int64_t den = 1;
    for (auto& f : fracs) den = std::lcm(den, f.second);
    SplitSpec spec;
    spec.den = den;
    spec.train_num = fracs[0].first * (den / fracs[0].second);
    spec.cv_num = fracs[1].first * (den / fracs[1].second);
    spec.test_num = fracs[2].first * (den / fracs[2].second);
    spec.seed = seed;
    if (spec.train_num <= 0 || spec.cv_num <= 0 || spec.test_num <= 0)
        throw Error("corpus: split fractions must each be > 0");
    if (spec.train_num + spec.cv_num + spec.test_num != den)
        throw Error("corpus: split fractions must sum to exactly 1");
    return spec;
}

SplitResult split(const LabeledCorpus& corpus, const SplitSpec& spec) {
    SplitResult out;
    out.train.classes = out.cv.classes = out.test.classes = corpus.classes;

    for (const auto& cls : corpus.classes) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (corpus.labels[i] == cls) idx.push_back(i);
        if (idx.size() < 3)
            throw Error("corpus: class '" + cls + "' has fewer than 3 documents");

        SplitMix64 rng(derive_seed(spec.seed, cls));
        shuffle(idx, rng);

        auto n = static_cast<std::int64_t>(idx.size());
        std::size_t cut1 = static_cast<std::size_t>(n * spec.train_num / spec.den);
        std::size_t cut2 = static_cast<std::size_t>(n * (spec.train_num + spec.cv_num) / spec.den);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            LabeledCorpus& dest = p < cut1 ? out.train : (p < cut2 ? out.cv : out.test);
            dest.documents.push_back(corpus.documents[idx[p]]);
            dest.labels.push_back(corpus.labels[idx[p]]);
        }
    }
    return out;
}

} // namespace textclass
