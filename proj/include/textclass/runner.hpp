#ifndef TEXTCLASS_RUNNER_HPP
#define TEXTCLASS_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "textclass/corpus.hpp"
#include "textclass/model.hpp"

namespace textclass {

/// Everything a command needs to run; the CLI layer fills it from flags
/// and the optional key-value config file.
struct RunConfig {
    std::string corpus_path;
    CorpusFormat format = CorpusFormat::dir_per_class;
    std::string split = "0.6,0.2,0.2";
    std::size_t max_features = 2000;
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string stoplist_path;  // empty: built-in list
    TrainOptions options;
};

/// All commands return process exit statuses: 0 on success, 1 on runtime
/// failure (usage errors are the CLI parser's 2). Failures print
/// "error: <module-qualified message>" on err.

/// Split, build the feature space from the training part only, train one
/// model, print train/cv macro-F1, and write <out>/<kind>.model (plus
/// <out>/bpn.log.csv with the per-epoch cost / cv macro-F1 curve for the
/// network).
int run_train(const RunConfig& cfg, ModelKind kind, std::ostream& out, std::ostream& err);

/// Classify one document with a stored model: prints the class name, and
/// with show_scores one "<class> <score>" line per class after it.
int run_predict(const std::string& model_path, const std::string& stoplist_path,
                const std::string& text, bool show_scores, std::ostream& out, std::ostream& err);

/// Score a stored model against a labeled corpus: prints the per-class
/// table and writes <out>/<kind>.eval.csv when out_dir is non-empty.
int run_evaluate(const std::string& model_path, const std::string& stoplist_path,
                 const std::string& corpus_path, CorpusFormat format, const std::string& out_dir,
                 std::ostream& out, std::ostream& err);

/// Train all seven base models plus the voted ensemble on one split and
/// report test macro-F1 side by side. Per-model failures become FAILED
/// rows while the remaining models still run (the exit status is 1 if any
/// row failed). Writes benchmark.txt, benchmark.csv and every model file
/// into out_dir.
int run_benchmark(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace textclass

#endif
