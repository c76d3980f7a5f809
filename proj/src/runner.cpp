#include "textclass/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <utility>
#include <vector>

#include "textclass/features.hpp"
#include "textclass/metrics.hpp"
#include "textclass/model_io.hpp"
#include "textclass/text.hpp"

namespace textclass {
namespace {

namespace fs = std::filesystem;

Stoplist resolve_stoplist(const std::string& path) {
    return path.empty() ? Stoplist::builtin() : Stoplist::from_file(path);
}

std::string dataset_name(const std::string& corpus_path) {
    fs::path p(corpus_path);
    std::string name = p.filename().string();
    if (name.empty()) name = p.parent_path().filename().string();  // trailing slash
    return name.empty() ? corpus_path : name;
}

struct PreparedData {
    Stoplist stoplist;
    SplitResult parts;
    FeatureSpace space;
    VectorizedDataset train;
    VectorizedDataset cv;
};

PreparedData prepare(const RunConfig& cfg) {
    PreparedData d;
    d.stoplist = resolve_stoplist(cfg.stoplist_path);
    LabeledCorpus corpus = load_corpus(cfg.corpus_path, cfg.format);
    corpus.validate();
    d.parts = split(corpus, SplitSpec::parse(cfg.split, cfg.seed));
    d.space = build_feature_space(d.parts.train, cfg.max_features, d.stoplist);
    d.train = vectorize_corpus(d.parts.train, d.space, VectorKind::count);
    d.cv = vectorize_corpus(d.parts.cv, d.space, VectorKind::count);
    return d;
}

const char* kernel_form_name(KernelForm form) {
    return form == KernelForm::standard ? "standard" : "literal";
}

const char* activation_name(HiddenActivation a) {
    return a == HiddenActivation::sigmoid ? "sigmoid" : "gaussian";
}

const char* tie_break_name(TieBreak t) {
    return t == TieBreak::best_cv_f1 ? "best_cv_f1" : "first_member";
}

using Echo = std::vector<std::pair<std::string, std::string>>;

void echo_gd(Echo& echo, const std::string& prefix, const GdConfig& gd, bool with_decay) {
    echo.emplace_back(prefix + ".alpha", format_double(gd.alpha));
    echo.emplace_back(prefix + ".epochs", std::to_string(gd.epochs));
    if (with_decay) echo.emplace_back(prefix + ".decay_horizon", format_double(gd.decay_horizon));
    echo.emplace_back(prefix + ".convergence_tol", format_double(gd.convergence_tol));
}

void echo_svm(Echo& echo, const std::string& prefix, const SvmConfig& svm, bool with_kernel) {
    echo.emplace_back(prefix + ".C", format_double(svm.C));
    if (with_kernel) {
        echo.emplace_back(prefix + ".sigma", format_double(svm.sigma));
        echo.emplace_back(prefix + ".kernel_form", kernel_form_name(svm.kernel_form));
        echo.emplace_back(prefix + ".max_landmarks", std::to_string(svm.max_landmarks));
    }
    echo.emplace_back(prefix + ".epochs", std::to_string(svm.epochs));
}

void echo_bpn(Echo& echo, const BpnConfig& bpn) {
    std::string hidden;
    for (std::size_t i = 0; i < bpn.hidden_sizes.size(); ++i) {
        if (i > 0) hidden += "x";
        hidden += std::to_string(bpn.hidden_sizes[i]);
    }
    echo.emplace_back("bpn.hidden", hidden);
    echo.emplace_back("bpn.lambda", format_double(bpn.lambda));
    echo.emplace_back("bpn.alpha", format_double(bpn.alpha));
    echo.emplace_back("bpn.max_epochs", std::to_string(bpn.max_epochs));
    echo.emplace_back("bpn.patience", std::to_string(bpn.patience));
    echo.emplace_back("bpn.init_epsilon", format_double(bpn.init_epsilon));
    echo.emplace_back("bpn.input_scale", format_double(bpn.input_scale));
    echo.emplace_back("bpn.activation", activation_name(bpn.activation));
}

Echo config_echo(const RunConfig& cfg, ModelKind kind) {
    Echo echo;
    echo.emplace_back("split", cfg.split);
    echo.emplace_back("max_features", std::to_string(cfg.max_features));
    const bool all = kind == ModelKind::voted;
    if (all || kind == ModelKind::lr) echo_gd(echo, "lr", cfg.options.lr, false);
    if (all || kind == ModelKind::sgd) echo_gd(echo, "sgd", cfg.options.sgd, true);
    if (all || kind == ModelKind::svc) echo_svm(echo, "svc", cfg.options.svc, true);
    if (all || kind == ModelKind::linsvc) echo_svm(echo, "linsvc", cfg.options.linsvc, false);
    if (all || kind == ModelKind::bpn) echo_bpn(echo, cfg.options.bpn);
    if (all) echo.emplace_back("tie_break", tie_break_name(cfg.options.tie_break));
    return echo;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("runner: cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw Error("runner: write failed for " + path.string());
}

std::string bpn_log_csv(const std::vector<BpnEpoch>& log) {
    std::string csv = "epoch,cost,cv_macro_f1\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        csv += std::to_string(i + 1);
        csv += ",";
        csv += format_double(log[i].cost);
        csv += ",";
        csv += format_double(log[i].cv_macro_f1);
        csv += "\n";
    }
    return csv;
}

} // namespace

int run_train(const RunConfig& cfg, ModelKind kind, std::ostream& out, std::ostream& err) {
    try {
        PreparedData d = prepare(cfg);
        std::vector<BpnEpoch> bpn_log;
        TrainedModel model =
            train_model(kind, d.train.X, d.train.y, d.cv.X, d.cv.y, d.parts.train.classes,
                        d.space.fingerprint(), cfg.options, &bpn_log);
        EvaluationReport on_train =
            evaluate_model(model, d.parts.train, d.space, kind_name(kind), "train", cfg.seed);
        EvaluationReport on_cv =
            evaluate_model(model, d.parts.cv, d.space, kind_name(kind), "cv", cfg.seed);

        out << "model " << kind_name(kind) << "\n";
        out << "documents " << d.parts.train.size() << " train / " << d.parts.cv.size()
            << " cv / " << d.parts.test.size() << " test\n";
        out << "features " << d.space.dim() << "\n";
        out << "train macro-F1 " << format_double(on_train.macro_f1) << "\n";
        out << "cv macro-F1 " << format_double(on_cv.macro_f1) << "\n";

        fs::create_directories(cfg.out_dir);
        const fs::path model_path = fs::path(cfg.out_dir) / (kind_name(kind) + ".model");
        save_model(model_path.string(), model, d.space, cfg.seed, config_echo(cfg, kind));
        out << "wrote " << model_path.string() << "\n";
        if (kind == ModelKind::bpn) {
            const fs::path log_path = fs::path(cfg.out_dir) / "bpn.log.csv";
            write_file(log_path, bpn_log_csv(bpn_log));
            out << "wrote " << log_path.string() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_predict(const std::string& model_path, const std::string& stoplist_path,
                const std::string& text, bool show_scores, std::ostream& out, std::ostream& err) {
    try {
        const LoadedModel loaded = load_model(model_path, resolve_stoplist(stoplist_path));
        const Vector counts = vectorize({"input", text}, loaded.space, VectorKind::count);
        const Prediction pred = model_predict(loaded.model, counts);
        const std::vector<std::string>& classes = loaded.model.classes();
        out << classes[static_cast<std::size_t>(pred.class_index)] << "\n";
        if (show_scores) {
            for (std::size_t c = 0; c < classes.size(); ++c)
                out << classes[c] << " " << format_double(pred.scores[static_cast<Index>(c)])
                    << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_evaluate(const std::string& model_path, const std::string& stoplist_path,
                 const std::string& corpus_path, CorpusFormat format, const std::string& out_dir,
                 std::ostream& out, std::ostream& err) {
    try {
        const LoadedModel loaded = load_model(model_path, resolve_stoplist(stoplist_path));
        LabeledCorpus corpus = load_corpus(corpus_path, format);
        corpus.validate();
        const EvaluationReport report =
            evaluate_model(loaded.model, corpus, loaded.space, kind_name(loaded.model.kind),
                           dataset_name(corpus_path), loaded.seed);
        out << render_text(report);
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            const fs::path csv_path =
                fs::path(out_dir) / (kind_name(loaded.model.kind) + ".eval.csv");
            write_file(csv_path, csv_header() + render_csv_rows(report));
            out << "wrote " << csv_path.string() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_benchmark(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        PreparedData d = prepare(cfg);
        fs::create_directories(cfg.out_dir);
        const std::string dataset = dataset_name(cfg.corpus_path);

        struct Row {
            ModelKind kind;
            bool ok;
            std::string error;
            EvaluationReport report;
        };
        std::vector<Row> rows;
        std::string csv = csv_header();
        bool any_failed = false;

        std::vector<ModelKind> kinds = base_kinds();
        kinds.push_back(ModelKind::voted);
        for (ModelKind kind : kinds) {
            try {
                std::vector<BpnEpoch> bpn_log;
                TrainedModel model =
                    train_model(kind, d.train.X, d.train.y, d.cv.X, d.cv.y,
                                d.parts.train.classes, d.space.fingerprint(), cfg.options,
                                &bpn_log);
                EvaluationReport report = evaluate_model(model, d.parts.test, d.space,
                                                         kind_name(kind), dataset, cfg.seed);
                const fs::path model_path = fs::path(cfg.out_dir) / (kind_name(kind) + ".model");
                save_model(model_path.string(), model, d.space, cfg.seed,
                           config_echo(cfg, kind));
                if (kind == ModelKind::bpn)
                    write_file(fs::path(cfg.out_dir) / "bpn.log.csv", bpn_log_csv(bpn_log));
                csv += render_csv_rows(report);
                rows.push_back({kind, true, "", std::move(report)});
            } catch (const std::exception& e) {
                any_failed = true;
                rows.push_back({kind, false, e.what(), {}});
            }
        }

        std::string table = "test-set scores on '" + dataset + "' (seed " +
                            std::to_string(cfg.seed) + ", split " + cfg.split + ")\n\n";
        char line[160];
        std::snprintf(line, sizeof(line), "%-8s %10s %10s %10s\n", "model", "macro-F1",
                      "micro-F1", "accuracy");
        table += line;
        for (const Row& row : rows) {
            if (row.ok) {
                std::snprintf(line, sizeof(line), "%-8s %10.4f %10.4f %10.4f\n",
                              kind_name(row.kind).c_str(), row.report.macro_f1,
                              row.report.micro_f1, row.report.accuracy);
                table += line;
            } else {
                std::snprintf(line, sizeof(line), "%-8s FAILED: %s\n",
                              kind_name(row.kind).c_str(), row.error.c_str());
                table += line;
            }
        }
        out << table;

        write_file(fs::path(cfg.out_dir) / "benchmark.txt", table);
        write_file(fs::path(cfg.out_dir) / "benchmark.csv", csv);
        out << "wrote " << (fs::path(cfg.out_dir) / "benchmark.txt").string() << "\n";
        out << "wrote " << (fs::path(cfg.out_dir) / "benchmark.csv").string() << "\n";
        return any_failed ? 1 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace textclass
