#ifndef TEXTCLASS_METRICS_HPP
#define TEXTCLASS_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace textclass {

/// One-vs-rest confusion counts for a single class.
struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

struct Prf1 {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Counts for target_class over parallel prediction/truth lists of class
/// indices. Throws on length mismatch or empty input.
ConfusionCounts confusion_counts(const std::vector<int>& predictions,
                                 const std::vector<int>& truth, int target_class);

/// P = tp/(tp+fp), R = tp/(tp+fn), F1 = 2PR/(P+R); every zero-denominator
/// case is defined as 0.
Prf1 prf1(const ConfusionCounts& c);

struct AggregateScores {
    double macro_f1 = 0.0;  // unweighted mean of per-class F1
    double micro_f1 = 0.0;  // prf1 over pooled counts
    double accuracy = 0.0;  // correct / total
};

AggregateScores aggregate(const std::vector<ConfusionCounts>& per_class);

struct ClassReport {
    std::string class_name;
    ConfusionCounts counts;
    Prf1 rates;
};

struct EvaluationReport {
    std::string model_name;
    std::string dataset_name;
    std::uint64_t seed = 0;
    std::vector<ClassReport> per_class;
    double macro_f1 = 0.0;
    double micro_f1 = 0.0;
    double accuracy = 0.0;
};

/// Assemble the full report from parallel index lists.
EvaluationReport build_report(const std::string& model_name, const std::string& dataset_name,
                              std::uint64_t seed, const std::vector<int>& predictions,
                              const std::vector<int>& truth,
                              const std::vector<std::string>& class_names);

/// Aligned human-readable table with the zero-denominator conventions
/// stated in the footer. Byte-deterministic for identical reports.
std::string render_text(const EvaluationReport& report);

/// CSV rows, one per class: model,dataset,class,tp,tn,fp,fn,precision,
/// recall,f1,macro_f1,micro_f1,accuracy,seed. Floats use shortest
/// round-trip formatting so identical reports are byte-identical.
std::string csv_header();
std::string render_csv_rows(const EvaluationReport& report);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

} // namespace textclass

#endif
