#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "textclass/metrics.hpp"
#include "textclass/rng.hpp"
#include "textclass/types.hpp"

using namespace textclass;

TEST_SUITE("metrics") {

TEST_CASE("confusion counts, one-vs-rest") {
    std::vector<int> preds = {0, 1, 1, 2};
    std::vector<int> truth = {0, 1, 2, 2};

    ConfusionCounts c0 = confusion_counts(preds, truth, 0);
    CHECK(c0.tp == 1); CHECK(c0.tn == 3); CHECK(c0.fp == 0); CHECK(c0.fn == 0);

    ConfusionCounts c1 = confusion_counts(preds, truth, 1);
    CHECK(c1.tp == 1); CHECK(c1.tn == 2); CHECK(c1.fp == 1); CHECK(c1.fn == 0);

    ConfusionCounts c2 = confusion_counts(preds, truth, 2);
    CHECK(c2.tp == 1); CHECK(c2.tn == 2); CHECK(c2.fp == 0); CHECK(c2.fn == 1);

    CHECK_THROWS_AS(confusion_counts({0, 1}, {0}, 0), Error);
    CHECK_THROWS_AS(confusion_counts({}, {}, 0), Error);
}

// Exhaustive check against rational arithmetic: precision and recall are
// exact integer divisions, and F1 is compared through the algebraically
// reduced form 2tp/(2tp+fp+fn), which never passes through the P/R
// floating-point intermediates the implementation uses.
TEST_CASE("prf1 equals the rational oracle for all counts up to 20") {
    int checked = 0;
    for (std::int64_t tp = 0; tp <= 20; ++tp)
        for (std::int64_t fp = 0; fp <= 20; ++fp)
            for (std::int64_t fn = 0; fn <= 20; ++fn)
                for (std::int64_t tn = 0; tn <= 20; ++tn) {
                    Prf1 got = prf1({tp, tn, fp, fn});
                    const double p_expect =
                        tp + fp == 0 ? 0.0
                                     : static_cast<double>(tp) / static_cast<double>(tp + fp);
                    const double r_expect =
                        tp + fn == 0 ? 0.0
                                     : static_cast<double>(tp) / static_cast<double>(tp + fn);
                    const double f1_expect =
                        2 * tp + fp + fn == 0 || tp == 0
                            ? 0.0
                            : 2.0 * static_cast<double>(tp) /
                                  static_cast<double>(2 * tp + fp + fn);
                    bool ok = got.precision == p_expect && got.recall == r_expect &&
                              std::fabs(got.f1 - f1_expect) <= 1e-12;
                    if (!ok) {
                        CAPTURE(tp); CAPTURE(fp); CAPTURE(fn); CAPTURE(tn);
                        CHECK(got.precision == p_expect);
                        CHECK(got.recall == r_expect);
                        CHECK(got.f1 == doctest::Approx(f1_expect));
                    } else {
                        ++checked;
                    }
                }
    CHECK(checked == 21 * 21 * 21 * 21);
}

TEST_CASE("zero-denominator conventions") {
    // no positive predictions and no positive truth
    Prf1 all_zero = prf1({0, 10, 0, 0});
    CHECK(all_zero.precision == 0.0);
    CHECK(all_zero.recall == 0.0);
    CHECK(all_zero.f1 == 0.0);
    // predictions but no true positives
    Prf1 no_tp = prf1({0, 5, 3, 2});
    CHECK(no_tp.precision == 0.0);
    CHECK(no_tp.recall == 0.0);
    CHECK(no_tp.f1 == 0.0);
}

TEST_CASE("micro-F1 equals accuracy on random single-label predictions") {
    SplitMix64 rng(20260814);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + static_cast<int>(rng.next_below(5));
        const std::size_t n = 1 + rng.next_below(60);
        std::vector<int> preds(n), truth(n);
        for (std::size_t i = 0; i < n; ++i) {
            preds[i] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
            truth[i] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
        }
        std::vector<ConfusionCounts> per_class;
        for (int c = 0; c < k; ++c) per_class.push_back(confusion_counts(preds, truth, c));
        AggregateScores agg = aggregate(per_class);

        std::size_t correct = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (preds[i] == truth[i]) ++correct;
        const double accuracy = static_cast<double>(correct) / static_cast<double>(n);

        CHECK(agg.accuracy == accuracy);
        CHECK(std::fabs(agg.micro_f1 - accuracy) <= 1e-12);
    }
}

TEST_CASE("macro is the unweighted mean of per-class F1") {
    std::vector<ConfusionCounts> counts = {
        {2, 1, 1, 0},  // P=2/3 R=1   F1=4/5
        {1, 3, 0, 0},  // P=1   R=1   F1=1
        {0, 3, 0, 1},  // absent predictions: F1=0
    };
    AggregateScores agg = aggregate(counts);
    CHECK(agg.macro_f1 == doctest::Approx((0.8 + 1.0 + 0.0) / 3.0).epsilon(1e-15));
    CHECK(agg.accuracy == doctest::Approx(3.0 / 4.0).epsilon(1e-15));
}

TEST_CASE("report assembly and rendering") {
    std::vector<int> preds = {0, 0, 1, 1, 1};
    std::vector<int> truth = {0, 1, 1, 1, 0};
    EvaluationReport rep = build_report("mnb", "toy", 7, preds, truth, {"neg", "pos"});
    CHECK(rep.per_class.size() == 2);
    CHECK(rep.per_class[0].class_name == "neg");
    CHECK(rep.per_class[0].counts.tp == 1);
    CHECK(rep.per_class[1].counts.tp == 2);
    CHECK(rep.accuracy == doctest::Approx(0.6));

    std::string text = render_text(rep);
    CHECK(text.find("mnb") != std::string::npos);
    CHECK(text.find("toy") != std::string::npos);
    CHECK(text.find("neg") != std::string::npos);
    CHECK(text.find("denominator is 0") != std::string::npos);
    CHECK(render_text(rep) == text);  // byte-stable

    CHECK(csv_header() ==
          "model,dataset,class,tp,tn,fp,fn,precision,recall,f1,macro_f1,micro_f1,accuracy,"
          "seed\n");
    std::string rows = render_csv_rows(rep);
    CHECK(rows.find("mnb,toy,neg,1,2,1,1,") == 0);
    CHECK(rows.find("\nmnb,toy,pos,2,1,1,1,") != std::string::npos);
}

TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.25) == "-2.25");
    SplitMix64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        double v = (rng.next_unit() - 0.5) * std::pow(10.0, static_cast<double>(rng.next_below(13)) - 6.0);
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

} // TEST_SUITE
