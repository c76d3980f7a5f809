#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "textclass/corpus.hpp"
#include "textclass/types.hpp"

namespace fs = std::filesystem;
using namespace textclass;

namespace {

// Scratch tree under the test runner's CWD; wiped before and after each use.
struct TempTree {
    fs::path root;
    explicit TempTree(const std::string& name) : root(fs::path("corpus_test_tmp") / name) {
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }
    void file(const std::string& rel, const std::string& content) const {
        fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << content;
    }
};

std::vector<std::string> ids(const LabeledCorpus& c) {
    std::vector<std::string> out;
    for (const auto& d : c.documents) out.push_back(d.id);
    return out;
}

} // namespace

TEST_SUITE("corpus") {

TEST_CASE("dir_per_class loads sorted classes and files") {
    TempTree t("dir_basic");
    t.file("pos/b.txt", "good fun");
    t.file("pos/a.txt", "great");
    t.file("neg/only.txt", "bad");
    LabeledCorpus c = load_corpus(t.root.string(), CorpusFormat::dir_per_class);

    CHECK(c.classes == std::vector<std::string>{"neg", "pos"});
    CHECK(ids(c) == std::vector<std::string>{"neg/only.txt", "pos/a.txt", "pos/b.txt"});
    CHECK(c.labels == std::vector<std::string>{"neg", "pos", "pos"});
    CHECK(c.documents[1].text == "great");
    CHECK(c.label_index(0) == 0);
    CHECK(c.label_index(2) == 1);
}

TEST_CASE("dir_per_class skips dotfiles and non-directories") {
    TempTree t("dir_dots");
    t.file("pos/a.txt", "x");
    t.file("pos/.hidden", "skip me");
    t.file("neg/a.txt", "y");
    t.file(".git/config", "noise");   // hidden directory is not a class
    t.file("README", "stray file at the root is not a class");
    LabeledCorpus c = load_corpus(t.root.string(), CorpusFormat::dir_per_class);
    CHECK(c.classes == std::vector<std::string>{"neg", "pos"});
    CHECK(c.size() == 2);
}

TEST_CASE("dir_per_class error cases") {
    SUBCASE("missing path") {
        CHECK_THROWS_WITH_AS(load_corpus("corpus_test_tmp/nope", CorpusFormat::dir_per_class),
                             doctest::Contains("does not exist"), Error);
    }
    SUBCASE("single class") {
        TempTree t("dir_one_class");
        t.file("pos/a.txt", "x");
        CHECK_THROWS_WITH_AS(load_corpus(t.root.string(), CorpusFormat::dir_per_class),
                             doctest::Contains("fewer than 2 classes"), Error);
    }
    SUBCASE("empty class directory") {
        TempTree t("dir_empty_class");
        t.file("pos/a.txt", "x");
        fs::create_directories(t.root / "neg");
        CHECK_THROWS_WITH_AS(load_corpus(t.root.string(), CorpusFormat::dir_per_class),
                             doctest::Contains("'neg' has no documents"), Error);
    }
    SUBCASE("invalid UTF-8 names the file") {
        TempTree t("dir_bad_utf8");
        t.file("pos/a.txt", "x");
        t.file("neg/bad.txt", std::string("abc\xFF\xFEz", 6));
        CHECK_THROWS_WITH_AS(load_corpus(t.root.string(), CorpusFormat::dir_per_class),
                             doctest::Contains("bad.txt"), Error);
    }
}

TEST_CASE("jsonl loads records with line-number ids") {
    TempTree t("jsonl_basic");
    t.file("c.jsonl",
           "{\"text\": \"good fun\", \"label\": \"pos\"}\n"
           "\n"
           "  \t \n"
           "{\"text\": \"bad\", \"label\": \"neg\"}\r\n"
           "{\"text\": \"\", \"label\": \"pos\"}\n");
    LabeledCorpus c = load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl);

    CHECK(c.classes == std::vector<std::string>{"neg", "pos"}); // sorted unique
    CHECK(ids(c) == std::vector<std::string>{"1", "4", "5"});   // blanks keep numbering
    CHECK(c.labels == std::vector<std::string>{"pos", "neg", "pos"});
    CHECK(c.documents[1].text == "bad");
    CHECK(c.documents[2].text.empty());
}

TEST_CASE("jsonl error cases name the line") {
    TempTree t("jsonl_bad");
    SUBCASE("malformed JSON") {
        t.file("c.jsonl", "{\"text\": \"a\", \"label\": \"pos\"}\n{oops\n");
        CHECK_THROWS_WITH_AS(load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl),
                             doctest::Contains("line 2"), Error);
    }
    SUBCASE("missing label field") {
        t.file("c.jsonl", "{\"text\": \"a\"}\n");
        CHECK_THROWS_WITH_AS(load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl),
                             doctest::Contains("line 1"), Error);
    }
    SUBCASE("non-string text") {
        t.file("c.jsonl", "{\"text\": 3, \"label\": \"pos\"}\n");
        CHECK_THROWS_WITH_AS(load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl),
                             doctest::Contains("line 1"), Error);
    }
    SUBCASE("invalid UTF-8") {
        t.file("c.jsonl", std::string("{\"text\": \"\xC3(\", \"label\": \"pos\"}\n"));
        CHECK_THROWS_WITH_AS(load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl),
                             doctest::Contains("line 1"), Error);
    }
    SUBCASE("single class") {
        t.file("c.jsonl",
               "{\"text\": \"a\", \"label\": \"pos\"}\n{\"text\": \"b\", \"label\": \"pos\"}\n");
        CHECK_THROWS_WITH_AS(load_corpus((t.root / "c.jsonl").string(), CorpusFormat::jsonl),
                             doctest::Contains("fewer than 2 classes"), Error);
    }
}

TEST_CASE("validate rejects broken structures") {
    LabeledCorpus good;
    good.documents = {{"a", "x"}, {"b", "y"}};
    good.labels = {"neg", "pos"};
    good.classes = {"neg", "pos"};
    CHECK_NOTHROW(good.validate());

    SUBCASE("size mismatch") {
        LabeledCorpus c = good;
        c.labels.pop_back();
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("size mismatch"), Error);
    }
    SUBCASE("duplicate id") {
        LabeledCorpus c = good;
        c.documents[1].id = "a";
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("duplicate document id"), Error);
    }
    SUBCASE("empty id") {
        LabeledCorpus c = good;
        c.documents[0].id = "";
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("empty document id"), Error);
    }
    SUBCASE("label outside class list") {
        LabeledCorpus c = good;
        c.labels[0] = "meh";
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("'meh'"), Error);
    }
    SUBCASE("fewer than two classes") {
        LabeledCorpus c = good;
        c.labels = {"pos", "pos"};
        c.classes = {"pos"};
        CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("fewer than 2 classes"), Error);
    }
}

TEST_CASE("split spec parses exact decimal fractions") {
    SplitSpec s = SplitSpec::parse("0.6,0.2,0.2", 9);
    CHECK(s.seed == 9);
    // ratios are exact: train/den == 3/5 etc.
    CHECK(s.train_num * 5 == 3 * s.den);
    CHECK(s.cv_num * 5 == 1 * s.den);
    CHECK(s.test_num * 5 == 1 * s.den);
    CHECK(s.train_num + s.cv_num + s.test_num == s.den);

    SplitSpec q = SplitSpec::parse("0.5,0.25,0.25", 1);
    CHECK(q.train_num * 2 == q.den);
    CHECK(q.cv_num * 4 == q.den);

    SplitSpec dotless = SplitSpec::parse(".7,.2,.1", 1);
    CHECK(dotless.train_num * 10 == 7 * dotless.den);
}

TEST_CASE("split spec rejects bad fraction lists") {
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.6,0.4", 1),
                         doctest::Contains("exactly 3"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.6,0.2,0.2,0.0", 1),
                         doctest::Contains("exactly 3"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.6,0.2,0.3", 1),
                         doctest::Contains("sum to exactly 1"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.5,0.5,0.0", 1),
                         doctest::Contains("> 0"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("a,b,c", 1),
                         doctest::Contains("bad split fraction"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.6,-0.2,0.6", 1),
                         doctest::Contains("bad split fraction"), Error);
    CHECK_THROWS_WITH_AS(SplitSpec::parse("0.3333333333,0.3333333333,0.3333333334", 1),
                         doctest::Contains("too many digits"), Error);
}

namespace {

LabeledCorpus numbered_corpus(int n_neg, int n_pos) {
    LabeledCorpus c;
    c.classes = {"neg", "pos"};
    for (int i = 0; i < n_neg; ++i) {
        c.documents.push_back({"neg/" + std::to_string(i), "n" + std::to_string(i)});
        c.labels.push_back("neg");
    }
    for (int i = 0; i < n_pos; ++i) {
        c.documents.push_back({"pos/" + std::to_string(i), "p" + std::to_string(i)});
        c.labels.push_back("pos");
    }
    return c;
}

std::size_t count_label(const LabeledCorpus& c, const std::string& label) {
    return static_cast<std::size_t>(std::count(c.labels.begin(), c.labels.end(), label));
}

} // namespace

TEST_CASE("split partitions each class by exact floor cuts") {
    LabeledCorpus c = numbered_corpus(11, 7);
    SplitResult r = split(c, SplitSpec::parse("0.6,0.2,0.2", 42));

    // 11 docs: cuts at floor(6.6)=6 and floor(8.8)=8 -> 6/2/3
    CHECK(count_label(r.train, "neg") == 6);
    CHECK(count_label(r.cv, "neg") == 2);
    CHECK(count_label(r.test, "neg") == 3);
    // 7 docs: cuts at floor(4.2)=4 and floor(5.6)=5 -> 4/1/2
    CHECK(count_label(r.train, "pos") == 4);
    CHECK(count_label(r.cv, "pos") == 1);
    CHECK(count_label(r.test, "pos") == 2);

    // parts are a disjoint cover of the corpus
    std::set<std::string> seen;
    for (const LabeledCorpus* part : {&r.train, &r.cv, &r.test})
        for (const auto& d : part->documents)
            CHECK(seen.insert(d.id).second);
    CHECK(seen.size() == c.size());
    for (const LabeledCorpus* part : {&r.train, &r.cv, &r.test}) {
        CHECK(part->classes == c.classes);
        CHECK_NOTHROW(part->validate());
    }
}

TEST_CASE("split is deterministic in the seed") {
    LabeledCorpus c = numbered_corpus(40, 40);
    SplitResult a = split(c, SplitSpec::parse("0.6,0.2,0.2", 7));
    SplitResult b = split(c, SplitSpec::parse("0.6,0.2,0.2", 7));
    CHECK(ids(a.train) == ids(b.train));
    CHECK(ids(a.cv) == ids(b.cv));
    CHECK(ids(a.test) == ids(b.test));

    SplitResult other = split(c, SplitSpec::parse("0.6,0.2,0.2", 8));
    CHECK(ids(other.train) != ids(a.train));

    // shuffled, not a prefix slice of insertion order
    std::vector<std::string> sorted_train = ids(a.train);
    std::sort(sorted_train.begin(), sorted_train.end());
    CHECK(ids(a.train) != sorted_train);
}

TEST_CASE("split needs at least 3 documents per class") {
    LabeledCorpus c = numbered_corpus(3, 2);
    CHECK_THROWS_WITH_AS(split(c, SplitSpec::parse("0.6,0.2,0.2", 1)),
                         doctest::Contains("'pos' has fewer than 3"), Error);
    LabeledCorpus ok = numbered_corpus(3, 3);
    CHECK_NOTHROW(split(ok, SplitSpec::parse("0.6,0.2,0.2", 1)));
}

} // TEST_SUITE
