#include "textclass/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "textclass/metrics.hpp"
#include "textclass/porter.hpp"

namespace textclass {

namespace {

// Names (class labels, terms, config values) are percent-encoded so
// whitespace and control bytes cannot break the line structure.
std::string encode_name(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (c > 0x20 && c < 0x7F && c != '%') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

std::string decode_name(const std::string& s, std::size_t lineno) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '%') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 2 >= s.size() || hex_digit(s[i + 1]) < 0 || hex_digit(s[i + 2]) < 0)
            throw Error("model: line " + std::to_string(lineno) + ": bad percent encoding");
        out.push_back(static_cast<char>(hex_digit(s[i + 1]) * 16 + hex_digit(s[i + 2])));
        i += 2;
    }
    return out;
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary), path_(path) {
        if (!out_) throw Error("model: cannot write '" + path + "'");
    }
    void line(const std::string& s) { out_ << s << '\n'; }
    void kv(const std::string& key, const std::string& value) {
        out_ << key << ' ' << value << '\n';
    }
    void vector(const std::string& key, const Vector& v) {
        out_ << key;
        for (Index i = 0; i < v.size(); ++i) out_ << ' ' << format_double(v[i]);
        out_ << '\n';
    }
    void matrix(const std::string& key, const Matrix& m) {
        out_ << key << ' ' << m.rows() << ' ' << m.cols() << '\n';
        for (Index r = 0; r < m.rows(); ++r) {
            for (Index c = 0; c < m.cols(); ++c) {
                if (c) out_ << ' ';
                out_ << format_double(m(r, c));
            }
            out_ << '\n';
        }
    }
    void close() {
        out_.close();
        if (!out_) throw Error("model: write to '" + path_ + "' failed");
    }

private:
    std::ofstream out_;
    std::string path_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
        if (!in_) throw Error("model: cannot read '" + path + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("model: " + path_ + ": line " + std::to_string(lineno_) + ": " + what);
    }

    // Next line split into whitespace-separated fields.
    std::vector<std::string> fields() {
        if (pushback_) {
            pushback_ = false;
            return std::move(pending_);
        }
        std::string line;
        if (!std::getline(in_, line)) fail("unexpected end of file");
        ++lineno_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> out;
        std::istringstream ss(line);
        std::string f;
        while (ss >> f) out.push_back(f);
        return out;
    }

    void unread(std::vector<std::string> f) {
        pending_ = std::move(f);
        pushback_ = true;
    }

    // Line of the exact form "<key> <payload...>"; returns the payload.
    std::vector<std::string> expect(const std::string& key, std::size_t min_payload = 0) {
        auto f = fields();
        if (f.empty() || f[0] != key) fail("expected field '" + key + "'");
        if (f.size() < 1 + min_payload) fail("field '" + key + "' is missing values");
        f.erase(f.begin());
        return f;
    }

    std::size_t lineno() const { return lineno_; }

    double parse_double(const std::string& s) const {
        double v;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            fail("bad number '" + s + "'");
        return v;
    }

    long long parse_int(const std::string& s) const {
        long long v;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            fail("bad integer '" + s + "'");
        return v;
    }

    Vector parse_vector(const std::vector<std::string>& f) const {
        Vector v(static_cast<Index>(f.size()));
        for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<Index>(i)] = parse_double(f[i]);
        return v;
    }

    Matrix read_matrix(const std::string& key) {
        auto hdr = expect(key, 2);
        long long rows = parse_int(hdr[0]);
        long long cols = parse_int(hdr[1]);
        if (rows < 0 || cols < 0) fail("bad matrix shape");
        Matrix m(rows, cols);
        for (long long r = 0; r < rows; ++r) {
            auto f = fields();
            if (static_cast<long long>(f.size()) != cols) fail("matrix row has wrong width");
            for (long long c = 0; c < cols; ++c)
                m(r, c) = parse_double(f[static_cast<std::size_t>(c)]);
        }
        return m;
    }

private:
    std::ifstream in_;
    std::string path_;
    std::size_t lineno_ = 0;
    bool pushback_ = false;
    std::vector<std::string> pending_;
};

const char* variant_tag(SvmModel::Variant v) {
    return v == SvmModel::Variant::linear ? "linear" : "gaussian";
}

const char* form_tag(KernelForm f) { return f == KernelForm::standard ? "standard" : "literal"; }

const char* activation_tag(HiddenActivation a) {
    return a == HiddenActivation::sigmoid ? "sigmoid" : "gaussian";
}

void write_base_params(Writer& w, const BaseModel& m) {
    switch (m.kind) {
        case ModelKind::mnb:
        case ModelKind::bnb:
            w.vector("prior", m.nb.prior);
            w.matrix("condprob", m.nb.condprob);
            return;
        case ModelKind::lr:
        case ModelKind::sgd:
            w.matrix("weights", m.linear.weights);
            return;
        case ModelKind::svc:
        case ModelKind::linsvc:
            w.kv("variant", variant_tag(m.svm.variant));
            w.kv("sigma", format_double(m.svm.sigma));
            w.kv("kernel_form", form_tag(m.svm.kernel_form));
            w.matrix("weights", m.svm.weights);
            if (m.svm.variant == SvmModel::Variant::gaussian)
                w.matrix("landmarks", m.svm.landmarks);
            return;
        case ModelKind::bpn: {
            std::ostringstream layers;
            for (std::size_t i = 0; i < m.net.layer_sizes.size(); ++i) {
                if (i) layers << ' ';
                layers << m.net.layer_sizes[i];
            }
            w.kv("layers", layers.str());
            w.kv("input_scale", format_double(m.net.input_scale));
            w.kv("activation", activation_tag(m.net.activation));
            for (std::size_t l = 0; l < m.net.theta.size(); ++l)
                w.matrix("theta" + std::to_string(l), m.net.theta[l]);
            return;
        }
        default: throw Error("model: not a base model kind");
    }
}

BaseModel read_base_params(Reader& r, ModelKind kind, const std::vector<std::string>& classes,
                           const std::string& space_ref) {
    BaseModel m;
    m.kind = kind;
    const Index k = static_cast<Index>(classes.size());
    switch (kind) {
        case ModelKind::mnb:
        case ModelKind::bnb:
            m.nb.variant = kind == ModelKind::mnb ? NbModel::Variant::multinomial
                                                  : NbModel::Variant::bernoulli;
            m.nb.classes = classes;
            m.nb.space_ref = space_ref;
            m.nb.prior = r.parse_vector(r.expect("prior", classes.size()));
            m.nb.condprob = r.read_matrix("condprob");
            if (m.nb.prior.size() != k || m.nb.condprob.cols() != k)
                r.fail("parameter shape does not match class list");
            return m;
        case ModelKind::lr:
        case ModelKind::sgd:
            m.linear.classes = classes;
            m.linear.space_ref = space_ref;
            m.linear.weights = r.read_matrix("weights");
            if (m.linear.weights.rows() != k) r.fail("parameter shape does not match class list");
            return m;
        case ModelKind::svc:
        case ModelKind::linsvc: {
            m.svm.classes = classes;
            m.svm.space_ref = space_ref;
            std::string variant = r.expect("variant", 1)[0];
            if (variant == "linear") m.svm.variant = SvmModel::Variant::linear;
            else if (variant == "gaussian") m.svm.variant = SvmModel::Variant::gaussian;
            else r.fail("bad svm variant '" + variant + "'");
            m.svm.sigma = r.parse_double(r.expect("sigma", 1)[0]);
            std::string form = r.expect("kernel_form", 1)[0];
            if (form == "standard") m.svm.kernel_form = KernelForm::standard;
            else if (form == "literal") m.svm.kernel_form = KernelForm::literal;
            else r.fail("bad kernel form '" + form + "'");
            m.svm.weights = r.read_matrix("weights");
            if (m.svm.variant == SvmModel::Variant::gaussian)
                m.svm.landmarks = r.read_matrix("landmarks");
            if (m.svm.weights.rows() != k) r.fail("parameter shape does not match class list");
            return m;
        }
        case ModelKind::bpn: {
            m.net.classes = classes;
            m.net.space_ref = space_ref;
            auto layers = r.expect("layers", 4);
            if (layers.size() != 4) r.fail("expected 4 layer sizes");
            for (const auto& s : layers)
                m.net.layer_sizes.push_back(static_cast<int>(r.parse_int(s)));
            m.net.input_scale = r.parse_double(r.expect("input_scale", 1)[0]);
            std::string act = r.expect("activation", 1)[0];
            if (act == "sigmoid") m.net.activation = HiddenActivation::sigmoid;
            else if (act == "gaussian") m.net.activation = HiddenActivation::gaussian;
            else r.fail("bad activation '" + act + "'");
            for (int l = 0; l < 3; ++l)
                m.net.theta.push_back(r.read_matrix("theta" + std::to_string(l)));
            if (m.net.layer_sizes[3] != static_cast<int>(classes.size()))
                r.fail("parameter shape does not match class list");
            return m;
        }
        default: throw Error("model: not a base model kind");
    }
}

} // namespace

void save_model(const std::string& path, const TrainedModel& model, const FeatureSpace& space,
                std::uint64_t seed,
                const std::vector<std::pair<std::string, std::string>>& config_echo) {
    Writer w(path);
    w.kv("textclass-model", std::to_string(kModelFormatVersion));
    w.kv("kind", kind_name(model.kind));
    w.kv("seed", std::to_string(seed));
    w.kv("stoplist", space.stoplist.version());
    w.kv("stemmer", kStemmerVersion);
    w.kv("max_features", std::to_string(space.max_features));
    w.kv("fingerprint", space.fingerprint());

    const auto& classes = model.classes();
    std::ostringstream cls;
    cls << classes.size();
    for (const auto& c : classes) cls << ' ' << encode_name(c);
    w.kv("classes", cls.str());

    w.kv("terms", std::to_string(space.terms.size()));
    for (std::size_t i = 0; i < space.terms.size(); ++i)
        w.line(encode_name(space.terms[i]) + " " + format_double(space.df[i]));

    for (const auto& [key, value] : config_echo)
        w.kv("config", key + "=" + encode_name(value));

    if (model.kind == ModelKind::voted) {
        w.kv("tie_break", model.voted.tie_break == TieBreak::best_cv_f1 ? "best_cv_f1"
                                                                        : "first_member");
        Vector cv(static_cast<Index>(model.voted.cv_f1.size()));
        for (std::size_t i = 0; i < model.voted.cv_f1.size(); ++i)
            cv[static_cast<Index>(i)] = model.voted.cv_f1[i];
        w.vector("cv_f1", cv);
        w.kv("members", std::to_string(model.voted.members.size()));
        for (const auto& member : model.voted.members) {
            w.kv("member", kind_name(member.kind));
            write_base_params(w, member);
            w.line("end_member");
        }
    } else {
        write_base_params(w, model.base);
    }
    w.line("end");
    w.close();
}

LoadedModel load_model(const std::string& path, const Stoplist& stoplist) {
    Reader r(path);

    auto version = r.expect("textclass-model", 1);
    if (r.parse_int(version[0]) != kModelFormatVersion)
        r.fail("unsupported model format version " + version[0]);
    ModelKind kind = kind_from_name(r.expect("kind", 1)[0]);

    LoadedModel out;
    out.model.kind = kind;
    out.seed = static_cast<std::uint64_t>(r.parse_int(r.expect("seed", 1)[0]));

    std::string stored_stoplist = r.expect("stoplist", 1)[0];
    if (stored_stoplist != stoplist.version())
        throw Error("model: stop-word list mismatch: model was trained with list version " +
                    stored_stoplist + " but the provided list has version " + stoplist.version() +
                    "; supply the original list via --stoplist");
    std::string stored_stemmer = r.expect("stemmer", 1)[0];
    if (stored_stemmer != kStemmerVersion)
        throw Error("model: stemmer version mismatch: model needs '" + stored_stemmer +
                    "', this build provides '" + kStemmerVersion + "'");

    FeatureSpace& space = out.space;
    space.stoplist = stoplist;
    space.max_features = static_cast<std::size_t>(r.parse_int(r.expect("max_features", 1)[0]));
    space.pipeline_fingerprint =
        make_pipeline_fingerprint(stoplist.version(), kStemmerVersion, space.max_features);
    std::string stored_fingerprint = r.expect("fingerprint", 1)[0];

    auto cls_fields = r.expect("classes", 1);
    long long n_classes = r.parse_int(cls_fields[0]);
    if (n_classes < 2 || static_cast<std::size_t>(n_classes) != cls_fields.size() - 1)
        r.fail("bad class list");
    std::vector<std::string> classes;
    for (long long i = 0; i < n_classes; ++i)
        classes.push_back(decode_name(cls_fields[static_cast<std::size_t>(i) + 1], r.lineno()));

    long long n_terms = r.parse_int(r.expect("terms", 1)[0]);
    if (n_terms < 1) r.fail("model has no terms");
    for (long long i = 0; i < n_terms; ++i) {
        auto f = r.fields();
        if (f.size() != 2) r.fail("expected '<term> <df>'");
        std::string term = decode_name(f[0], r.lineno());
        space.index.emplace(term, static_cast<int>(space.terms.size()));
        space.terms.push_back(std::move(term));
        space.df.push_back(r.parse_double(f[1]));
    }
    if (space.fingerprint() != stored_fingerprint)
        r.fail("feature-space fingerprint mismatch (file corrupted?)");
    const std::string space_ref = space.fingerprint();

    // Config echo lines are informational; collect until a non-config line.
    while (true) {
        auto f = r.fields();
        if (f.empty() || f[0] != "config") {
            r.unread(std::move(f));
            break;
        }
        if (f.size() < 2) r.fail("bad config line");
        std::string kv = f[1];
        for (std::size_t i = 2; i < f.size(); ++i) kv += " " + f[i];
        auto eq = kv.find('=');
        if (eq == std::string::npos) r.fail("bad config line");
        out.config_echo.emplace_back(kv.substr(0, eq), decode_name(kv.substr(eq + 1), r.lineno()));
    }

    if (kind == ModelKind::voted) {
        auto tb = r.expect("tie_break", 1);
        if (tb[0] == "best_cv_f1") out.model.voted.tie_break = TieBreak::best_cv_f1;
        else if (tb[0] == "first_member") out.model.voted.tie_break = TieBreak::first_member;
        else r.fail("bad tie_break '" + tb[0] + "'");
        auto cv = r.expect("cv_f1", 1);
        for (const auto& s : cv) out.model.voted.cv_f1.push_back(r.parse_double(s));
        long long n_members = r.parse_int(r.expect("members", 1)[0]);
        if (n_members < 2) r.fail("ensemble needs at least 2 members");
        if (static_cast<std::size_t>(n_members) != out.model.voted.cv_f1.size())
            r.fail("cv_f1 count does not match member count");
        for (long long i = 0; i < n_members; ++i) {
            ModelKind member_kind = kind_from_name(r.expect("member", 1)[0]);
            out.model.voted.members.push_back(read_base_params(r, member_kind, classes, space_ref));
            r.expect("end_member");
        }
    } else {
        out.model.base = read_base_params(r, kind, classes, space_ref);
    }
    r.expect("end");
    return out;
}

} // namespace textclass
