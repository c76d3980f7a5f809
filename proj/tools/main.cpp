#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "textclass/runner.hpp"

namespace tc = textclass;

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& v) {
    std::size_t used = 0;
    unsigned long long out = 0;
    try {
        out = std::stoull(v, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != v.size() || v.empty() || v[0] == '-')
        throw tc::Error("invalid unsigned integer '" + v + "'");
    return out;
}

int parse_pos_int(const std::string& v) {
    const std::uint64_t out = parse_u64(v);
    if (out == 0 || out > 1000000000ULL) throw tc::Error("'" + v + "' is out of range");
    return static_cast<int>(out);
}

double parse_double(const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != v.size() || v.empty()) throw tc::Error("invalid number '" + v + "'");
    return out;
}

tc::CorpusFormat parse_format(const std::string& v) {
    if (v == "dir") return tc::CorpusFormat::dir_per_class;
    if (v == "jsonl") return tc::CorpusFormat::jsonl;
    throw tc::Error("invalid format '" + v + "' (expected dir or jsonl)");
}

tc::KernelForm parse_kernel_form(const std::string& v) {
    if (v == "standard") return tc::KernelForm::standard;
    if (v == "literal") return tc::KernelForm::literal;
    throw tc::Error("invalid kernel form '" + v + "' (expected standard or literal)");
}

void apply_config_entry(tc::RunConfig& cfg, const std::string& key, const std::string& value) {
    tc::TrainOptions& opt = cfg.options;
    if (key == "corpus") cfg.corpus_path = value;
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "split") cfg.split = value;
    else if (key == "max-features") cfg.max_features = static_cast<std::size_t>(parse_pos_int(value));
    else if (key == "seed") cfg.seed = parse_u64(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "stoplist") cfg.stoplist_path = value;
    else if (key == "kernel-form") opt.svc.kernel_form = parse_kernel_form(value);
    else if (key == "tie-break") {
        if (value == "best_cv_f1") opt.tie_break = tc::TieBreak::best_cv_f1;
        else if (value == "first_member") opt.tie_break = tc::TieBreak::first_member;
        else throw tc::Error("invalid tie-break '" + value + "'");
    }
    else if (key == "lr.alpha") opt.lr.alpha = parse_double(value);
    else if (key == "lr.epochs") opt.lr.epochs = parse_pos_int(value);
    else if (key == "lr.tol") opt.lr.convergence_tol = parse_double(value);
    else if (key == "sgd.alpha") opt.sgd.alpha = parse_double(value);
    else if (key == "sgd.epochs") opt.sgd.epochs = parse_pos_int(value);
    else if (key == "sgd.decay-horizon") opt.sgd.decay_horizon = parse_double(value);
    else if (key == "svc.c") opt.svc.C = parse_double(value);
    else if (key == "svc.sigma") opt.svc.sigma = parse_double(value);
    else if (key == "svc.epochs") opt.svc.epochs = parse_pos_int(value);
    else if (key == "svc.max-landmarks") opt.svc.max_landmarks = parse_pos_int(value);
    else if (key == "linsvc.c") opt.linsvc.C = parse_double(value);
    else if (key == "linsvc.epochs") opt.linsvc.epochs = parse_pos_int(value);
    else if (key == "bpn.hidden") {
        const auto x = value.find('x');
        if (x == std::string::npos) throw tc::Error("invalid bpn.hidden '" + value + "' (expected AxB)");
        opt.bpn.hidden_sizes = {parse_pos_int(value.substr(0, x)), parse_pos_int(value.substr(x + 1))};
    }
    else if (key == "bpn.lambda") opt.bpn.lambda = parse_double(value);
    else if (key == "bpn.alpha") opt.bpn.alpha = parse_double(value);
    else if (key == "bpn.max-epochs") opt.bpn.max_epochs = parse_pos_int(value);
    else if (key == "bpn.patience") opt.bpn.patience = parse_pos_int(value);
    else if (key == "bpn.init-epsilon") opt.bpn.init_epsilon = parse_double(value);
    else if (key == "bpn.input-scale") opt.bpn.input_scale = parse_double(value);
    else if (key == "bpn.activation") {
        if (value == "sigmoid") opt.bpn.activation = tc::HiddenActivation::sigmoid;
        else if (value == "gaussian") opt.bpn.activation = tc::HiddenActivation::gaussian;
        else throw tc::Error("invalid activation '" + value + "'");
    }
    else throw tc::Error("unknown key '" + key + "'");
}

void apply_config_file(tc::RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tc::Error("cli: cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        const std::string key = eq == std::string::npos ? "" : trim(s.substr(0, eq));
        try {
            if (eq == std::string::npos) throw tc::Error("expected key=value");
            if (key.empty()) throw tc::Error("empty key");
            apply_config_entry(cfg, key, trim(s.substr(eq + 1)));
        } catch (const tc::Error& e) {
            throw tc::Error("cli: " + path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

/// Flag storage for train/benchmark; defaults mirror RunConfig's.
struct RunFlags {
    std::string corpus;
    std::string format = "dir";
    std::string split = "0.6,0.2,0.2";
    std::size_t max_features = 2000;
    std::uint64_t seed = 42;
    std::string out = ".";
    std::string config;
    std::string stoplist;
    std::string kernel_form = "standard";

    CLI::Option* o_corpus = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_split = nullptr;
    CLI::Option* o_max = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_stoplist = nullptr;
    CLI::Option* o_kernel = nullptr;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
    f.o_corpus = cmd->add_option("--corpus", f.corpus,
                                 "corpus root directory (dir format) or .jsonl file");
    f.o_format = cmd->add_option("--format", f.format, "corpus format")
                     ->check(CLI::IsMember({"dir", "jsonl"}))
                     ->capture_default_str();
    f.o_split = cmd->add_option("--split", f.split, "train,cv,test fractions (must sum to 1)")
                    ->capture_default_str();
    f.o_max = cmd->add_option("--max-features", f.max_features,
                              "vocabulary cap, document-frequency ranked")
                  ->check(CLI::PositiveNumber)
                  ->capture_default_str();
    f.o_seed = cmd->add_option("--seed", f.seed,
                               "master seed; every stochastic step derives its stream from it")
                   ->capture_default_str();
    f.o_out = cmd->add_option("--out", f.out, "output directory")->capture_default_str();
    cmd->add_option("--config", f.config, "flat key=value config file (flags override it)")
        ->check(CLI::ExistingFile);
    f.o_stoplist =
        cmd->add_option("--stoplist", f.stoplist, "stop-word file, one word per line "
                                                  "(default: built-in English list)");
    f.o_kernel = cmd->add_option("--kernel-form", f.kernel_form,
                                 "gaussian kernel feature form for svc")
                     ->check(CLI::IsMember({"standard", "literal"}));
}

tc::RunConfig make_config(const RunFlags& f) {
    tc::RunConfig cfg;
    if (!f.config.empty()) apply_config_file(cfg, f.config);
    if (f.o_corpus->count() > 0) cfg.corpus_path = f.corpus;
    if (f.o_format->count() > 0) cfg.format = parse_format(f.format);
    if (f.o_split->count() > 0) cfg.split = f.split;
    if (f.o_max->count() > 0) cfg.max_features = f.max_features;
    if (f.o_seed->count() > 0) cfg.seed = f.seed;
    if (f.o_out->count() > 0) cfg.out_dir = f.out;
    if (f.o_stoplist->count() > 0) cfg.stoplist_path = f.stoplist;
    if (f.o_kernel->count() > 0) cfg.options.svc.kernel_form = parse_kernel_form(f.kernel_form);
    if (cfg.corpus_path.empty())
        throw CLI::ValidationError("--corpus", "a corpus is required (flag or config key)");
    cfg.options.set_seed(cfg.seed);
    return cfg;
}

std::string read_file_or_fail(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tc::Error("cli: cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"from-scratch text classification: naive Bayes, linear, kernel SVM,\n"
                 "backprop network, and a voted ensemble over one shared preprocessing\n"
                 "pipeline (tokenize, stop words, stemming, document-frequency features)"};
    app.require_subcommand(1);
    app.footer(
        "config file keys (flat key=value lines, '#' comments; flags win):\n"
        "  corpus, format, split, max-features, seed, out, stoplist  as the flags\n"
        "  kernel-form {standard,literal}            svc features       (standard)\n"
        "  tie-break {best_cv_f1,first_member}       voted tie rule     (best_cv_f1)\n"
        "  lr.alpha (0.5)   lr.epochs (500)   lr.tol (1e-09)\n"
        "  sgd.alpha (0.1)  sgd.epochs (200)  sgd.decay-horizon (10)\n"
        "  svc.c (1)  svc.sigma (0.5)  svc.epochs (100)  svc.max-landmarks (5000)\n"
        "  linsvc.c (1)  linsvc.epochs (100)\n"
        "  bpn.hidden (64x32)  bpn.lambda (0.0001)  bpn.alpha (0.3)\n"
        "  bpn.max-epochs (400)  bpn.patience (60)  bpn.init-epsilon (0 = auto)\n"
        "  bpn.input-scale (8)  bpn.activation {sigmoid,gaussian} (sigmoid)\n"
        "exit status: 0 success, 1 runtime failure, 2 usage error");

    const std::vector<std::string> kind_names = {"mnb", "bnb",    "lr",  "sgd",
                                                 "svc", "linsvc", "bpn", "voted"};

    CLI::App* train = app.add_subcommand("train", "train one model and write <out>/<model>.model");
    RunFlags train_flags;
    std::string train_model_name;
    train->add_option("--model", train_model_name, "model kind")
        ->required()
        ->check(CLI::IsMember(kind_names));
    add_run_flags(train, train_flags);

    CLI::App* predict = app.add_subcommand("predict", "classify one document with a stored model");
    std::string pr_model_file, pr_stoplist, pr_text, pr_input;
    bool pr_scores = false;
    predict->add_option("--model-file", pr_model_file, "stored .model file")->required();
    predict->add_option("--stoplist", pr_stoplist,
                        "stop-word file matching the one used at training time");
    predict->add_flag("--scores", pr_scores, "also print per-class scores");
    CLI::Option* o_text = predict->add_option("--text", pr_text, "classify this literal text");
    predict->add_option("input", pr_input, "input text file (default: standard input)")
        ->excludes(o_text);

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "score a stored model against a labeled corpus");
    std::string ev_model_file, ev_corpus, ev_format = "dir", ev_out, ev_stoplist;
    evaluate->add_option("--model-file", ev_model_file, "stored .model file")->required();
    evaluate->add_option("--corpus", ev_corpus, "labeled corpus to score")->required();
    evaluate->add_option("--format", ev_format, "corpus format")
        ->check(CLI::IsMember({"dir", "jsonl"}))
        ->capture_default_str();
    evaluate->add_option("--out", ev_out, "directory for the CSV report (optional)");
    evaluate->add_option("--stoplist", ev_stoplist,
                         "stop-word file matching the one used at training time");

    CLI::App* benchmark = app.add_subcommand(
        "benchmark", "train all seven models plus the voted ensemble and compare test scores");
    RunFlags bench_flags;
    add_run_flags(benchmark, bench_flags);

    try {
        app.parse(argc, argv);

        if (*train)
            return tc::run_train(make_config(train_flags), tc::kind_from_name(train_model_name),
                                 std::cout, std::cerr);
        if (*predict) {
            std::string text;
            if (o_text->count() > 0) {
                text = pr_text;
            } else if (!pr_input.empty()) {
                text = read_file_or_fail(pr_input);
            } else {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            }
            return tc::run_predict(pr_model_file, pr_stoplist, text, pr_scores, std::cout,
                                   std::cerr);
        }
        if (*evaluate)
            return tc::run_evaluate(ev_model_file, ev_stoplist, ev_corpus,
                                    parse_format(ev_format), ev_out, std::cout, std::cerr);
        if (*benchmark) return tc::run_benchmark(make_config(bench_flags), std::cout, std::cerr);
        return 2;  // unreachable: require_subcommand
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const tc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
