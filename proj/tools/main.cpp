// hecke-forge command line: exact Hecke-group computations with JSON output.
//
// Subcommands: reduce, probe, domain, grading, tile, gamma0, genus-scan,
// dunkl, jack, eta, fock. Every run writes a single newline-terminated JSON
// document (or an SVG with --svg) to stdout. Exit codes: 0 success, 1
// computation error, 2 usage error.

#include <heckeforge/congruence.hpp>
#include <heckeforge/discreteness.hpp>
#include <heckeforge/domains.hpp>
#include <heckeforge/dunkl.hpp>
#include <heckeforge/eta.hpp>
#include <heckeforge/expr.hpp>
#include <heckeforge/fock.hpp>
#include <heckeforge/format.hpp>
#include <heckeforge/jack.hpp>
#include <heckeforge/parallel.hpp>
#include <heckeforge/reduce.hpp>
#include <heckeforge/svg.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hf = heckeforge;

namespace {

/// Errors in how the tool was invoked (flags, syntax, config) — exit 2.
/// Everything thrown after inputs are fully parsed is a computation error — exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- arguments

struct Args {
    std::string subcommand;
    std::map<std::string, std::string> values; // --flag value
    std::set<std::string> bools;               // --flag
    std::vector<std::string> loci;             // repeatable --loci

    bool has(const std::string& k) const { return values.count(k) || bools.count(k); }
    const std::string& value(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) throw UsageError("missing required flag --" + k);
        return it->second;
    }
    std::optional<std::string> maybe(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

const std::set<std::string> kBoolFlags = {"symmetric", "parallel", "svg", "axis-labels",
                                          "locus-labels", "help"};

Args parse_args(const std::vector<std::string>& argv,
                const std::set<std::string>& value_flags,
                const std::set<std::string>& bool_flags) {
    Args a;
    a.subcommand = argv.empty() ? "" : argv[0];
    for (std::size_t i = 1; i < argv.size(); ++i) {
        const std::string& arg = argv[i];
        if (arg.rfind("--", 0) != 0)
            throw UsageError("unexpected argument '" + arg + "' (flags start with --)");
        const std::string name = arg.substr(2);
        if (bool_flags.count(name)) {
            a.bools.insert(name);
        } else if (value_flags.count(name)) {
            if (i + 1 >= argv.size()) throw UsageError("flag --" + name + " needs a value");
            const std::string& v = argv[++i];
            if (name == "loci")
                a.loci.push_back(v);
            else if (!a.values.emplace(name, v).second)
                throw UsageError("flag --" + name + " given twice");
        } else {
            throw UsageError("unknown flag --" + name + " for subcommand '" + a.subcommand +
                             "'");
        }
    }
    return a;
}

// ------------------------------------------------------------ value parsing

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed " + what + ": '" + s + "' (expected an integer)");
    }
}

double parse_real(const std::string& s, const std::string& what) {
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c || *end != '\0' || !std::isfinite(v))
        throw UsageError("malformed " + what + ": '" + s + "' (expected a decimal number)");
    return v;
}

hf::Rational parse_rat(const std::string& s, const std::string& what) {
    auto r = hf::try_parse_rational(s);
    if (!r) throw UsageError("malformed " + what + ": '" + s + "' (expected p or p/q)");
    return *r;
}

/// "a+bi" / "a-bi" with decimal reals, e.g. "2.7+0.8i" or "-1+0.5i".
hf::HalfPlanePoint parse_point(const std::string& s) {
    if (s.size() < 2 || s.back() != 'i')
        throw UsageError("malformed point: '" + s + "' (expected a+bi)");
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }
    if (split == std::string::npos)
        throw UsageError("malformed point: '" + s + "' (expected a+bi)");
    double re = parse_real(s.substr(0, split), "point real part");
    double im = parse_real(s.substr(split, s.size() - split - 1), "point imaginary part");
    return {re, im};
}

std::vector<double> parse_csv_reals(const std::string& s, const std::string& what) {
    std::vector<double> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(parse_real(s.substr(i, j - i), what));
        i = j + 1;
    }
    return out;
}

// ----------------------------------------------------------------- config

struct Config {
    std::optional<int> q;
    std::optional<double> eps, tol, scale;
    std::optional<std::vector<double>> window; // 2 or 4 numbers
    std::optional<bool> axis_labels, locus_labels;
};

Config load_config(const Args& a) {
    std::string path;
    if (auto p = a.maybe("config")) {
        path = *p;
    } else if (const char* env = std::getenv("HECKE_FORGE_CONFIG")) {
        path = env;
    }
    Config c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file " + path + " must hold a JSON object");
    for (const auto& [key, val] : j.items()) {
        try {
            if (key == "q")
                c.q = val.get<int>();
            else if (key == "eps")
                c.eps = val.get<double>();
            else if (key == "tol")
                c.tol = val.get<double>();
            else if (key == "scale")
                c.scale = val.get<double>();
            else if (key == "axis_labels")
                c.axis_labels = val.get<bool>();
            else if (key == "locus_labels")
                c.locus_labels = val.get<bool>();
            else if (key == "window")
                c.window = val.get<std::vector<double>>();
            else
                throw UsageError("unknown config key '" + key + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("config key '" + key + "' has the wrong type");
        }
    }
    if (c.window && c.window->size() != 2 && c.window->size() != 4)
        throw UsageError("config window must hold 2 or 4 numbers");
    return c;
}

/// Window x-interval from --window, else the config, else the fallback.
hf::Interval resolve_window_x(const Args& a, const Config& cfg,
                              std::optional<hf::Interval> fallback = std::nullopt) {
    std::vector<double> w;
    if (auto s = a.maybe("window")) {
        w = parse_csv_reals(*s, "window");
    } else if (cfg.window) {
        w = *cfg.window;
    } else {
        if (fallback) return *fallback;
        throw UsageError("missing required flag --window (lo,hi)");
    }
    if (w.size() != 2 && w.size() != 4)
        throw UsageError("window must be lo,hi or xlo,xhi,ylo,yhi");
    return {w[0], w[1]};
}

std::optional<hf::Interval> resolve_window_y(const Args& a, const Config& cfg) {
    std::vector<double> w;
    if (auto s = a.maybe("window"))
        w = parse_csv_reals(*s, "window");
    else if (cfg.window)
        w = *cfg.window;
    else
        return std::nullopt;
    if (w.size() == 4) return hf::Interval{w[2], w[3]};
    return std::nullopt;
}

// ------------------------------------------------------------- json pieces

hf::Json interval_json(const hf::Interval& iv) {
    return hf::Json::array().push_back(iv.lo).push_back(iv.hi);
}

hf::Json locus_json(const hf::GradingLocus& l) {
    return hf::Json::object()
        .set("kind", hf::to_string(l.kind))
        .set("rule", hf::to_string(l.rule))
        .set("axis", hf::to_string(l.axis))
        .set("period", l.p);
}

void emit(const std::string& doc) { std::fwrite(doc.data(), 1, doc.size(), stdout); }

void emit_json(const hf::Json& j) { emit(j.dump() + "\n"); }

// ------------------------------------------------------------- subcommands

int cmd_reduce(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"q", "point", "max-steps", "config"}, {});
    Config cfg = load_config(a);
    int q;
    if (auto s = a.maybe("q"))
        q = static_cast<int>(parse_long(*s, "q"));
    else if (cfg.q)
        q = *cfg.q;
    else
        throw UsageError("missing required flag --q (or config key q)");
    hf::HalfPlanePoint z = parse_point(a.value("point"));
    int max_steps = 1000;
    if (auto s = a.maybe("max-steps")) max_steps = static_cast<int>(parse_long(*s, "max-steps"));

    hf::ReductionResult r = hf::reduce_point(z, q, max_steps);
    emit_json(hf::Json::object()
                  .set("reduced", hf::Json::object().set("re", r.reduced.re).set("im", r.reduced.im))
                  .set("word", r.word.str())
                  .set("steps", r.steps));
    return 0;
}

int cmd_probe(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"lambda", "word-length", "samples", "eps", "seed", "config"}, {});
    Config cfg = load_config(a);
    double lambda = parse_real(a.value("lambda"), "lambda");
    int word_length = 10;
    long samples = 300000;
    double eps = cfg.eps.value_or(1e-3);
    std::uint64_t seed = 0x48454b45u;
    if (auto s = a.maybe("word-length")) word_length = static_cast<int>(parse_long(*s, "word-length"));
    if (auto s = a.maybe("samples")) samples = parse_long(*s, "samples");
    if (auto s = a.maybe("eps")) eps = parse_real(*s, "eps");
    if (auto s = a.maybe("seed")) seed = static_cast<std::uint64_t>(parse_long(*s, "seed"));

    hf::ProbeResult r = hf::discreteness_probe(lambda, word_length, samples, eps, seed);
    hf::Json j = hf::Json::object()
                     .set("lambda", lambda)
                     .set("verdict", hf::to_string(r.verdict))
                     .set("words_examined", r.words_examined)
                     .set("exhaustive", r.exhaustive);
    if (r.witness) {
        const auto& w = *r.witness;
        j.set("witness",
              hf::Json::object()
                  .set("kind", w.kind == hf::ProbeWitness::Kind::OrbitPair
                                   ? "orbit-pair"
                                   : "identity-recurrence")
                  .set("word1", w.word1)
                  .set("word2", w.word2)
                  .set("image_distance", w.image_distance)
                  .set("matrix_distance", w.matrix_distance));
    } else {
        j.set("witness", nullptr);
    }
    emit_json(j);
    return 0;
}

hf::BoxDomain domain_from_flags(const Args& a) {
    hf::DomainLabel label = hf::parse_domain_label(a.value("label"));
    double x_beta;
    if (auto s = a.maybe("xbeta"))
        x_beta = parse_real(*s, "xbeta");
    else if (hf::is_picard(label))
        x_beta = 0.5;
    else
        throw UsageError("the vinberg domains need --xbeta");
    return hf::make_domain(label, x_beta, a.has("symmetric"));
}

/// --loci odd-halves[:axis] | multiples:<p>[:axis] | pair:<x_beta>[:axis]
hf::GradingLocus parse_locus(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i <= spec.size()) {
        std::size_t j = spec.find(':', i);
        if (j == std::string::npos) j = spec.size();
        parts.push_back(spec.substr(i, j - i));
        i = j + 1;
    }
    auto axis = [&](std::size_t idx, hf::LocusAxis dflt) {
        if (parts.size() <= idx) return dflt;
        const std::string& s = parts[idx];
        if (s == "x") return hf::LocusAxis::X;
        if (s == "y") return hf::LocusAxis::Y;
        if (s == "u") return hf::LocusAxis::U;
        if (s == "v") return hf::LocusAxis::V;
        throw UsageError("unknown locus axis '" + s + "'");
    };
    if (parts[0] == "odd-halves") {
        if (parts.size() > 2) throw UsageError("locus spec '" + spec + "' has too many fields");
        return hf::GradingLocus::simplex_odd_halves(axis(1, hf::LocusAxis::U));
    }
    if (parts[0] == "multiples" || parts[0] == "pair") {
        if (parts.size() < 2 || parts.size() > 3)
            throw UsageError("locus spec '" + spec + "' needs a period: " + parts[0] +
                             ":<number>[:axis]");
        double p = parse_real(parts[1], "locus period");
        if (!(p > 0)) throw UsageError("locus period must be > 0");
        return parts[0] == "multiples"
                   ? hf::GradingLocus::complex_multiples(p, axis(2, hf::LocusAxis::X))
                   : hf::GradingLocus::complex_pair(p, axis(2, hf::LocusAxis::X));
    }
    throw UsageError("unknown locus spec '" + spec +
                     "' (expected odd-halves, multiples:<p>, or pair:<x_beta>)");
}

int cmd_domain(const std::vector<std::string>& argv) {
    Args a = parse_args(argv,
                        {"label", "xbeta", "loci", "point", "tol", "window", "scale", "config"},
                        {"symmetric", "svg", "axis-labels", "locus-labels"});
    Config cfg = load_config(a);
    hf::BoxDomain d = domain_from_flags(a);
    std::vector<hf::GradingLocus> loci;
    for (const auto& spec : a.loci) loci.push_back(parse_locus(spec));

    if (a.has("svg")) {
        hf::RenderSpec spec;
        spec.domain = d;
        spec.loci = loci;
        spec.window_x = resolve_window_x(a, cfg, d.x_range);
        spec.window_y = resolve_window_y(a, cfg).value_or(d.y_range);
        spec.scale = cfg.scale.value_or(200);
        if (auto s = a.maybe("scale")) spec.scale = parse_real(*s, "scale");
        spec.axis_labels = a.has("axis-labels") || cfg.axis_labels.value_or(false);
        spec.locus_labels = a.has("locus-labels") || cfg.locus_labels.value_or(false);
        emit(hf::render_domain_svg(spec));
        return 0;
    }

    hf::Json j = hf::Json::object()
                     .set("label", hf::to_string(d.label))
                     .set("x_beta", d.x_beta)
                     .set("x_range", interval_json(d.x_range))
                     .set("y_range", interval_json(d.y_range));
    hf::Json lj = hf::Json::array();
    for (const auto& l : loci) lj.push_back(locus_json(l));
    j.set("loci", std::move(lj));

    if (auto s = a.maybe("point")) {
        std::vector<double> xy = parse_csv_reals(*s, "point coordinate");
        if (xy.size() != 2) throw UsageError("--point takes x,y");
        double tol = cfg.tol.value_or(1e-9);
        if (auto t = a.maybe("tol")) tol = parse_real(*t, "tol");
        hf::PointClass c = hf::classify_point(d, loci, xy[0], xy[1], tol);
        j.set("point", hf::Json::object().set("x", xy[0]).set("y", xy[1]));
        j.set("classification", hf::to_string(c));
    }
    emit_json(j);
    return 0;
}

int cmd_grading(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"rule", "period", "xbeta", "axis", "window", "config"}, {});
    Config cfg = load_config(a);
    const std::string rule = a.value("rule");
    std::string spec;
    if (rule == "odd-half-multiples") {
        spec = "odd-halves";
    } else if (rule == "all-multiples") {
        spec = "multiples:" + a.value("period");
    } else if (rule == "pair") {
        spec = "pair:" + a.value("xbeta");
    } else {
        throw UsageError("unknown rule '" + rule +
                         "' (expected odd-half-multiples, all-multiples, or pair)");
    }
    if (auto s = a.maybe("axis")) spec += ":" + *s;
    hf::GradingLocus l = parse_locus(spec);
    hf::Interval window = resolve_window_x(a, cfg);

    hf::Json pos = hf::Json::array();
    for (double x : hf::grading_positions(l, window)) pos.push_back(x);
    emit_json(hf::Json::object()
                  .set("kind", hf::to_string(l.kind))
                  .set("rule", hf::to_string(l.rule))
                  .set("axis", hf::to_string(l.axis))
                  .set("period", l.p)
                  .set("window", interval_json(window))
                  .set("positions", std::move(pos)));
    return 0;
}

int cmd_tile(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"label", "xbeta", "n", "window", "config"},
                        {"symmetric", "parallel"});
    Config cfg = load_config(a);
    hf::BoxDomain d = domain_from_flags(a);
    int n = 1;
    if (auto s = a.maybe("n")) n = static_cast<int>(parse_long(*s, "n"));
    hf::Interval window = resolve_window_x(a, cfg);

    std::vector<hf::Tile> tiles = hf::tile(d, n, window);
    // parallel map over tiles; slot-indexed output keeps the order sorted
    std::vector<hf::Json> rendered(tiles.size());
    hf::parallel_for(tiles.size(), a.has("parallel"), [&](std::size_t i) {
        rendered[i] = hf::Json::object()
                          .set("offset", tiles[i].offset)
                          .set("x_range", interval_json(tiles[i].box.x_range))
                          .set("y_range", interval_json(tiles[i].box.y_range));
    });
    hf::Json arr = hf::Json::array();
    for (auto& r : rendered) arr.push_back(std::move(r));
    emit_json(hf::Json::object()
                  .set("label", hf::to_string(d.label))
                  .set("n", n)
                  .set("window", interval_json(window))
                  .set("count", tiles.size())
                  .set("tiles", std::move(arr)));
    return 0;
}

int cmd_gamma0(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"n", "config"}, {});
    load_config(a); // validated even though no key applies
    long N = parse_long(a.value("n"), "n");
    hf::Gamma0Data d = hf::gamma0_invariants(N);
    emit_json(hf::Json::object()
                  .set("N", d.N)
                  .set("index", d.index)
                  .set("nu2", d.nu2)
                  .set("nu3", d.nu3)
                  .set("cusps", d.cusps)
                  .set("genus", d.genus));
    return 0;
}

int cmd_genus_scan(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"nmax", "genus", "config"}, {"parallel"});
    load_config(a);
    long nmax = parse_long(a.value("nmax"), "nmax");
    long g = parse_long(a.value("genus"), "genus");
    if (nmax < 1) throw UsageError("--nmax must be >= 1");

    std::vector<long> genus_of(static_cast<std::size_t>(nmax) + 1, -1);
    hf::parallel_for(static_cast<std::size_t>(nmax), a.has("parallel"), [&](std::size_t i) {
        genus_of[i + 1] = hf::gamma0_invariants(static_cast<long>(i) + 1).genus;
    });
    hf::Json levels = hf::Json::array();
    for (long N = 1; N <= nmax; ++N)
        if (genus_of[static_cast<std::size_t>(N)] == g) levels.push_back(N);
    emit_json(hf::Json::object()
                  .set("n_max", nmax)
                  .set("genus", g)
                  .set("levels", std::move(levels)));
    return 0;
}

int cmd_dunkl(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"nvars", "beta", "j", "expr", "config"}, {});
    load_config(a);
    int nvars = static_cast<int>(parse_long(a.value("nvars"), "nvars"));
    hf::Rational beta = parse_rat(a.value("beta"), "beta");
    int j = static_cast<int>(parse_long(a.value("j"), "j"));
    hf::MultiPoly p = [&] {
        try {
            return hf::parse_poly(a.value("expr"), nvars);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }();

    hf::MultiPoly out = hf::dunkl_apply(p, j, beta);
    emit_json(hf::Json::object()
                  .set("nvars", nvars)
                  .set("beta", hf::rational_str(beta))
                  .set("j", j)
                  .set("input", hf::poly_str(p))
                  .set("output", hf::poly_str(out)));
    return 0;
}

int cmd_jack(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"partition", "alpha", "nvars", "expand-expr", "config"}, {});
    load_config(a);
    hf::Rational alpha = parse_rat(a.value("alpha"), "alpha");

    if (auto expr = a.maybe("expand-expr")) {
        if (a.has("partition"))
            throw UsageError("--expand-expr and --partition are mutually exclusive");
        int nvars = static_cast<int>(parse_long(a.value("nvars"), "nvars"));
        hf::MultiPoly p = [&] {
            try {
                return hf::parse_poly(*expr, nvars);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
        }();
        auto expansion = hf::jack_expand(p, alpha);
        hf::Json terms = hf::Json::array();
        for (const auto& [la, c] : expansion)
            terms.push_back(hf::Json::array().push_back(la.str()).push_back(hf::rational_str(c)));
        emit_json(hf::Json::object()
                      .set("alpha", hf::rational_str(alpha))
                      .set("nvars", nvars)
                      .set("input", hf::poly_str(p))
                      .set("expansion", std::move(terms)));
        return 0;
    }

    hf::Partition la = [&] {
        try {
            return hf::Partition::parse(a.value("partition"));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }();
    auto coeffs = hf::jack_coefficients(la, alpha);
    hf::Json terms = hf::Json::array();
    for (const auto& [mu, c] : coeffs)
        terms.push_back(hf::Json::array().push_back(mu.str()).push_back(hf::rational_str(c)));
    hf::Json j = hf::Json::object()
                     .set("partition", la.str())
                     .set("alpha", hf::rational_str(alpha))
                     .set("coefficients", std::move(terms));
    if (auto s = a.maybe("nvars")) {
        int nvars = static_cast<int>(parse_long(*s, "nvars"));
        j.set("polynomial", hf::poly_str(hf::jack_polynomial(la, alpha, nvars)));
    }
    emit_json(j);
    return 0;
}

int cmd_eta(const std::vector<std::string>& argv) {
    Args a = parse_args(argv,
                        {"eta0", "sigmas", "k", "generator", "tol", "budget", "config"}, {});
    load_config(a);

    if (a.has("tol") || a.has("budget") || a.has("generator")) {
        // convergence mode
        double tol = parse_real(a.value("tol"), "tol");
        long budget = parse_long(a.value("budget"), "budget");
        std::string source;
        hf::SigmaGenerator gen;
        if (auto g = a.maybe("generator")) {
            source = *g;
            auto colon = g->find(':');
            if (colon == std::string::npos)
                throw UsageError("generator must be geometric:<r> or constant:<c>");
            const std::string name = g->substr(0, colon);
            double param = parse_real(g->substr(colon + 1), "generator parameter");
            if (name == "geometric")
                gen = hf::geometric_sigmas(param);
            else if (name == "constant")
                gen = hf::constant_sigmas(param);
            else
                throw UsageError("unknown generator '" + name +
                                 "' (expected geometric or constant)");
        } else if (auto s = a.maybe("sigmas")) {
            source = "list:" + *s;
            gen = hf::listed_sigmas(parse_csv_reals(*s, "sigma term"));
        } else {
            throw UsageError("convergence mode needs --generator or --sigmas");
        }
        hf::EtaConvergence r = hf::eta_convergence(gen, tol, budget);
        emit_json(hf::Json::object()
                      .set("source", source)
                      .set("tol", tol)
                      .set("budget", budget)
                      .set("converged", r.converged)
                      .set("index", r.index)
                      .set("partial", r.partial));
        return 0;
    }

    // exact partial-sum mode over rational terms
    hf::EtaSeries<hf::Rational> series;
    series.eta0 = parse_rat(a.value("eta0"), "eta0");
    if (auto s = a.maybe("sigmas")) {
        std::size_t i = 0;
        const std::string& str = *s;
        while (i <= str.size()) {
            std::size_t j = str.find(',', i);
            if (j == std::string::npos) j = str.size();
            series.sigmas.push_back(parse_rat(str.substr(i, j - i), "sigma term"));
            i = j + 1;
        }
    }
    long k = static_cast<long>(series.sigmas.size());
    if (auto s = a.maybe("k")) k = parse_long(*s, "k");
    if (k < 0 || static_cast<std::size_t>(k) > series.sigmas.size())
        throw UsageError("--k must lie in [0, number of sigmas]");

    emit_json(hf::Json::object()
                  .set("eta0", hf::rational_str(series.eta0))
                  .set("k", k)
                  .set("eta_plus", hf::rational_str(hf::eta_partial(series, k, hf::EtaSign::Plus)))
                  .set("eta_minus",
                       hf::rational_str(hf::eta_partial(series, k, hf::EtaSign::Minus))));
    return 0;
}

int cmd_fock(const std::vector<std::string>& argv) {
    Args a = parse_args(argv, {"spin", "nmin", "nmax", "config"}, {});
    load_config(a);
    hf::Rational s = parse_rat(a.value("spin"), "spin");
    long nmin = 0, nmax;
    if (auto v = a.maybe("nmin")) nmin = parse_long(*v, "nmin");
    nmax = parse_long(a.value("nmax"), "nmax");

    hf::FockCoefficients f = hf::fock_coefficients(s, nmin, nmax);
    hf::Json arr = hf::Json::array();
    for (const auto& c : f.coeffs)
        arr.push_back(hf::Json::array().push_back(c.re()).push_back(c.im()));
    emit_json(arr);
    return 0;
}

const char* kUsage =
    "usage: heckeforge <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  reduce      --q <int> --point <a+bi> [--max-steps n]\n"
    "  probe       --lambda <real> [--word-length L] [--samples n] [--eps e] [--seed s]\n"
    "  domain      --label <name> [--xbeta r] [--symmetric] [--loci SPEC]...\n"
    "              [--point x,y [--tol t]] [--svg [--window ...] [--scale s]\n"
    "              [--axis-labels] [--locus-labels]]\n"
    "  grading     --rule <odd-half-multiples|all-multiples|pair> [--period p]\n"
    "              [--xbeta b] [--axis a] --window lo,hi\n"
    "  tile        --label <name> [--xbeta r] [--symmetric] --window lo,hi\n"
    "              [--n 1] [--parallel]\n"
    "  gamma0      --n <level>\n"
    "  genus-scan  --nmax <N> --genus <g> [--parallel]\n"
    "  dunkl       --nvars N --beta p/q --j <index> --expr <polynomial>\n"
    "  jack        --alpha p/q (--partition 3,1,1 [--nvars N] | --expand-expr E --nvars N)\n"
    "  eta         --eta0 p/q --sigmas c1,c2,... [--k K]   (exact partial sums)\n"
    "              --tol t --budget B (--generator geometric:r|constant:c | --sigmas ...)\n"
    "  fock        --spin p/q --nmax N [--nmin M]\n"
    "\n"
    "Domain labels: picard, vinberg, gamma0-picard, gamma0-vinberg.\n"
    "Locus specs:   odd-halves[:axis], multiples:<p>[:axis], pair:<x_beta>[:axis].\n"
    "A JSON config file may preset q, eps, tol, window, scale, axis_labels,\n"
    "locus_labels; pass --config <path> or set HECKE_FORGE_CONFIG. Flags win.\n";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (args.empty()) throw UsageError("no subcommand given");
        const std::string& cmd = args[0];
        if (cmd == "--help" || cmd == "help") {
            std::fputs(kUsage, stdout);
            return 0;
        }
        std::vector<std::string> rest(args.begin(), args.end());
        try {
            if (cmd == "reduce") return cmd_reduce(rest);
            if (cmd == "probe") return cmd_probe(rest);
            if (cmd == "domain") return cmd_domain(rest);
            if (cmd == "grading") return cmd_grading(rest);
            if (cmd == "tile") return cmd_tile(rest);
            if (cmd == "gamma0") return cmd_gamma0(rest);
            if (cmd == "genus-scan") return cmd_genus_scan(rest);
            if (cmd == "dunkl") return cmd_dunkl(rest);
            if (cmd == "jack") return cmd_jack(rest);
            if (cmd == "eta") return cmd_eta(rest);
            if (cmd == "fock") return cmd_fock(rest);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
        throw UsageError("unknown subcommand '" + cmd + "'");
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n%s", e.what(), kUsage);
        return 2;
    }
}
