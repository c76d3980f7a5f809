#include "textclass/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "textclass/types.hpp"

namespace textclass {

ConfusionCounts confusion_counts(const std::vector<int>& predictions,
                                 const std::vector<int>& truth, int target_class) {
    if (predictions.size() != truth.size())
        throw Error("eval: predictions/truth length mismatch");
    if (predictions.empty()) throw Error("eval: empty prediction list");
    ConfusionCounts c;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        bool pred_is = predictions[i] == target_class;
        bool true_is = truth[i] == target_class;
        if (pred_is && true_is) ++c.tp;
        else if (pred_is && !true_is) ++c.fp;
        else if (!pred_is && true_is) ++c.fn;
        else ++c.tn;
    }
    return c;
}

Prf1 prf1(const ConfusionCounts& c) {
    Prf1 r;
    const double tp = static_cast<double>(c.tp);
    if (c.tp + c.fp > 0) r.precision = tp / static_cast<double>(c.tp + c.fp);
    if (c.tp + c.fn > 0) r.recall = tp / static_cast<double>(c.tp + c.fn);
    if (r.precision + r.recall > 0.0)
        r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

AggregateScores aggregate(const std::vector<ConfusionCounts>& per_class) {
    if (per_class.empty()) throw Error("eval: aggregate needs at least one class");
    AggregateScores out;
    ConfusionCounts pooled;
    std::int64_t correct = 0;
    double f1_sum = 0.0;
    for (const auto& c : per_class) {
        pooled.tp += c.tp;
        pooled.fp += c.fp;
        pooled.fn += c.fn;
        pooled.tn += c.tn;
        correct += c.tp;
        f1_sum += prf1(c).f1;
    }
    out.macro_f1 = f1_sum / static_cast<double>(per_class.size());
    out.micro_f1 = prf1(pooled).f1;
    const auto& any = per_class.front();
    const std::int64_t total = any.tp + any.tn + any.fp + any.fn;
    out.accuracy = total > 0 ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
    return out;
}

EvaluationReport build_report(const std::string& model_name, const std::string& dataset_name,
                              std::uint64_t seed, const std::vector<int>& predictions,
                              const std::vector<int>& truth,
                              const std::vector<std::string>& class_names) {
    EvaluationReport rep;
    rep.model_name = model_name;
    rep.dataset_name = dataset_name;
    rep.seed = seed;
    std::vector<ConfusionCounts> counts;
    for (std::size_t c = 0; c < class_names.size(); ++c) {
        ClassReport cr;
        cr.class_name = class_names[c];
        cr.counts = confusion_counts(predictions, truth, static_cast<int>(c));
        cr.rates = prf1(cr.counts);
        counts.push_back(cr.counts);
        rep.per_class.push_back(std::move(cr));
    }
    AggregateScores agg = aggregate(counts);
    rep.macro_f1 = agg.macro_f1;
    rep.micro_f1 = agg.micro_f1;
    rep.accuracy = agg.accuracy;
    return rep;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {
std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}
} // namespace

std::string render_text(const EvaluationReport& report) {
    std::ostringstream out;
    out << "model: " << report.model_name << "  dataset: " << report.dataset_name
        << "  seed: " << report.seed << "\n";
    std::size_t name_w = 5;
    for (const auto& c : report.per_class) name_w = std::max(name_w, c.class_name.size());
    out << std::string(name_w - 5, ' ') << "class"
        << "      tp      tn      fp      fn  precision   recall       f1\n";
    for (const auto& c : report.per_class) {
        out << std::string(name_w - c.class_name.size(), ' ') << c.class_name;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  %6lld  %6lld  %6lld  %6lld     %6.4f   %6.4f   %6.4f",
                      static_cast<long long>(c.counts.tp), static_cast<long long>(c.counts.tn),
                      static_cast<long long>(c.counts.fp), static_cast<long long>(c.counts.fn),
                      c.rates.precision, c.rates.recall, c.rates.f1);
        out << buf << "\n";
    }
    out << "macro_f1: " << fixed4(report.macro_f1) << "  micro_f1: " << fixed4(report.micro_f1)
        << "  accuracy: " << fixed4(report.accuracy) << "\n";
    out << "note: precision, recall and F1 are defined as 0 when their denominator is 0\n";
    return std::move(out).str();
}

std::string csv_header() {
    return "model,dataset,class,tp,tn,fp,fn,precision,recall,f1,macro_f1,micro_f1,accuracy,seed\n";
}

std::string render_csv_rows(const EvaluationReport& report) {
    std::ostringstream out;
    for (const auto& c : report.per_class) {
        out << report.model_name << ',' << report.dataset_name << ',' << c.class_name << ','
            << c.counts.tp << ',' << c.counts.tn << ',' << c.counts.fp << ',' << c.counts.fn << ','
            << format_double(c.rates.precision) << ',' << format_double(c.rates.recall) << ','
            << format_double(c.rates.f1) << ',' << format_double(report.macro_f1) << ','
            << format_double(report.micro_f1) << ',' << format_double(report.accuracy) << ','
            << report.seed << "\n";
    }
    return std::move(out).str();
}

} // namespace textclass
