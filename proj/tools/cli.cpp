#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wpd/errors.hpp"
#include "wpd/latticegen.hpp"
#include "wpd/polarize.hpp"
#include "wpd/polytope_io.hpp"
#include "wpd/series.hpp"
#include "wpd/svg.hpp"
#include "wpd/weights.hpp"

namespace wpd::cli {

namespace {

// Seed of the random sample points in `decompose`.
constexpr std::uint64_t kSampleSeed = 20240229;

struct Source {
    std::string file;
    std::string builtin;
};

struct Options {
    Source source;
    std::optional<int> decimal;
    std::int64_t seed = 2;
    std::optional<std::int64_t> compare_seed;
    std::string y;
    bool symbolic = false;
    std::string z;
    std::size_t order = 4;
    std::string out_path;
    int random_points = 20;
};

/// Accumulates one command's output: inputs, results, and identity checks.
class RunReport {
  public:
    RunReport(std::ostream& out, std::optional<int> decimal) : out_(out), decimal_(decimal) {}

    std::string num(const Rational& r) const { return decimal_ ? r.decimal(*decimal_) : r.str(); }
    std::string vec(const QVector& v) const {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + num(v[i]);
        return s + ")";
    }

    void line(const std::string& text) { out_ << text << '\n'; }
    void field(const std::string& key, const std::string& value) { out_ << key << ": " << value << '\n'; }
    void check(const std::string& name, bool pass) {
        failed_ = failed_ || !pass;
        out_ << "check " << name << ": " << (pass ? "PASS" : "FAIL") << '\n';
    }
    bool failed() const { return failed_; }

  private:
    std::ostream& out_;
    std::optional<int> decimal_;
    bool failed_ = false;
};

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Polytope load(const Source& src, RunReport& report) {
    if (src.file.empty() == src.builtin.empty())
        throw InputError("give exactly one of a polytope file or --builtin name:params");
    std::optional<Polytope> P;
    std::string name;
    if (!src.builtin.empty()) {
        P.emplace(builtin_polytope(src.builtin));
        name = "builtin " + src.builtin;
    } else {
        P.emplace(polytope_from_file(src.file));
        name = src.file;
    }
    report.field("input", name);
    report.field("digest", fnv1a(facets_to_text(P->facets())));
    report.field("dim", std::to_string(P->dim()));
    return std::move(*P);
}

WeightParam parse_y(const std::string& text) {
    try {
        return WeightParam(Rational::parse(text));
    } catch (const DomainError&) {
        throw DomainError("--y " + text + " rejected: the weight parameter must satisfy y != -1");
    }
}

QVector parse_vector(const std::string& text) {
    QVector v;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        v.push_back(Rational::parse(piece));
    return v;
}

std::string flags_str(const PolarizedCone& C) {
    std::string s;
    for (bool f : C.flipped)
        s += f ? 'F' : '.';
    return s;
}

void cmd_vertices(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    r.field("facets", std::to_string(P.facets().size()));
    r.field("vertices", std::to_string(P.vertices().size()));
    for (const auto& v : P.vertices()) {
        std::string facets, edges;
        for (auto f : v.active_facets)
            facets += (facets.empty() ? "" : " ") + std::to_string(f);
        for (const auto& e : v.edge_vectors)
            edges += (edges.empty() ? "" : " ") + r.vec(e);
        r.line("vertex " + r.vec(v.point) + " facets {" + facets + "} edges " + edges);
    }
    r.field("simple", "yes");
    r.field("regular", P.is_regular() ? "yes" : "no");
    r.field("integral", P.is_integral() ? "yes" : "no");
}

int cmd_decompose(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    std::optional<WeightParam> y;
    if (!o.y.empty())
        y = parse_y(o.y);
    auto xi = find_polarizing(P, o.seed);
    r.field("seed", std::to_string(o.seed));
    r.field("xi", r.vec(xi.xi));
    r.field("y", y ? r.num(y->y()) : "symbolic");
    auto cones = polarize_cones(P, xi);
    for (const auto& C : cones) {
        std::string gens;
        for (const auto& g : C.generators)
            gens += (gens.empty() ? "" : " ") + r.vec(g);
        r.line("cone " + r.vec(C.apex) + " sign " + (C.sign() > 0 ? "+" : "-") +
               " flips " + std::to_string(C.flip_count) + " [" + flags_str(C) + "] generators " + gens);
    }

    std::optional<std::vector<PolarizedCone>> other;
    if (o.compare_seed) {
        auto xi2 = find_polarizing(P, *o.compare_seed);
        r.field("compare-seed", std::to_string(*o.compare_seed));
        r.field("compare-xi", r.vec(xi2.xi));
        other = polarize_cones(P, xi2);
    }

    std::mt19937_64 rng(kSampleSeed);
    auto samples = sample_points(P, xi, rng, o.random_points);
    int failures = 0, mismatches = 0;
    for (const auto& s : samples) {
        std::string lhs, rhs;
        bool equal = false, same = true;
        if (y) {
            Rational l = polytope_weight(P, s.x, *y);
            Rational rh = decomposition_rhs(cones, s.x, *y);
            lhs = r.num(l);
            rhs = r.num(rh);
            equal = l == rh;
            if (other)
                same = decomposition_rhs(*other, s.x, *y) == rh;
        } else {
            auto c = check_decomposition_symbolic(P, cones, s.x);
            lhs = c.lhs.str();
            rhs = c.rhs.str();
            equal = c.equal;
            if (other)
                same = decomposition_rhs_symbolic(*other, s.x) == c.rhs;
        }
        failures += !equal;
        mismatches += !same;
        r.line("point " + r.vec(s.x) + " [" + s.kind + "] lhs " + lhs + " rhs " + rhs + (equal ? " EQUAL" : " DIFFER"));
    }
    r.field("sample points", std::to_string(samples.size()));
    r.check("weighted polar decomposition", failures == 0);
    if (other)
        r.check("polarization independence", mismatches == 0);
    return r.failed() ? kCheckFailed : kOk;
}

int cmd_count(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    auto wc = weighted_count_symbolic(P);
    if (o.symbolic || o.y.empty()) {
        r.field("weighted count", wc.str());
        std::string f;
        for (std::size_t c = 0; c < wc.by_codim.size(); ++c)
            f += (c ? " " : "") + wc.by_codim[c].get_str();
        r.field("points by codimension", f);
    }
    if (!o.y.empty()) {
        auto y = parse_y(o.y);
        r.field("y", r.num(y.y()));
        r.field("weighted count at y", r.num(wc.at(y)));
    }
    Integer total = 0;
    for (const auto& k : wc.by_codim)
        total += k;
    r.field("lattice points", total.get_str());
    return kOk;
}

int cmd_chi(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    if (o.y.empty() || o.z.empty())
        throw InputError("chi needs --y and --z");
    auto y = parse_y(o.y);
    QVector z = parse_vector(o.z);
    r.field("y", r.num(y.y()));
    r.field("z", r.vec(z));
    auto res = chi_y_eval(P, y, z);
    r.field("lhs", r.num(res.lhs));
    r.field("rhs", r.num(res.rhs));
    r.line(res.equal ? "EQUAL" : "DIFFER");
    r.check("vertex sum equals weighted lattice sum", res.equal);
    return r.failed() ? kCheckFailed : kOk;
}

int cmd_brion(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    auto res = brion_check(P);
    r.field("vertex sum numerator terms", std::to_string(res.lhs.num().terms().size()));
    r.field("vertex sum denominator", res.lhs.den().str());
    r.field("lattice polynomial (times (1+y)^" + std::to_string(P.dim()) + ")", res.rhs.poly.str());
    r.line(res.equal ? "EQUAL" : "DIFFER");
    r.check("sum of vertex generating functions equals weighted lattice polynomial", res.equal);
    return r.failed() ? kCheckFailed : kOk;
}

int cmd_series(const Options& o, RunReport& r) {
    const std::size_t K = o.order;
    auto line = [&](const std::string& name, const Series& s) {
        std::string t;
        for (std::size_t k = 0; k <= s.order(); ++k)
            t += (k ? ", " : "") + r.num(s[k]);
        r.field(name, t);
    };
    r.field("order", std::to_string(K));
    line("Todd", todd_series(K));
    line("Lhat", lhat_series(K));
    if (!o.y.empty()) {
        auto y = parse_y(o.y);
        r.field("y", r.num(y.y()));
        line("Q(y,x)", hirzebruch_series(y.y(), K));
        line("Q_y", qy_series(y, K));
    } else {
        auto qy = qy_series_symbolic(K);
        std::string t;
        for (std::size_t k = 0; k <= K; ++k)
            t += (k ? ", " : "") + qy[k].str();
        r.field("Q_y", t);
    }
    if (K >= 2)
        for (const auto& c : verify_identities(K))
            r.check(c.name, c.holds);
    return r.failed() ? kCheckFailed : kOk;
}

int cmd_svg(const Options& o, RunReport& r) {
    Polytope P = load(o.source, r);
    auto y = parse_y(o.y.empty() ? "0" : o.y);
    auto xi = find_polarizing(P, o.seed);
    std::string svg = render_decomposition_svg(P, xi, y);
    if (o.out_path.empty() || o.out_path == "-") {
        r.line(svg);
        return kOk;
    }
    std::ofstream f(o.out_path);
    if (!f)
        throw InputError("cannot write '" + o.out_path + "'");
    f << svg;
    r.field("xi", r.vec(xi.xi));
    r.field("y", r.num(y.y()));
    r.field("wrote", o.out_path);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted polar decomposition of simple polytopes, exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("file", o.source.file, "polytope file (JSON facets)");
        sub->add_option("--builtin", o.source.builtin,
                        "built-in polytope: interval:d, cube:n[,side], simplex:n[,d], trapezoid, prism, "
                        "skew-triangle, octahedron");
        sub->add_option("--decimal", o.decimal, "print numbers as decimals with this many digits");
    };

    auto* vertices = app.add_subcommand("vertices", "vertices, active facets, edge vectors, flags");
    add_source(vertices);

    auto* decompose = app.add_subcommand("decompose", "polarized cones and the pointwise weighted identity");
    add_source(decompose);
    decompose->add_option("--seed", o.seed, "moment-curve seed for the polarizing vector");
    decompose->add_option("--compare-seed", o.compare_seed, "second seed; checks that the cone sums agree");
    decompose->add_option("--y", o.y, "rational y != -1 (default: symbolic y)");
    decompose->add_option("--random-points", o.random_points, "random probe points")->check(CLI::NonNegativeNumber);

    auto* count = app.add_subcommand("count", "weighted lattice-point count");
    add_source(count);
    count->add_option("--y", o.y, "rational y != -1");
    count->add_flag("--symbolic", o.symbolic, "print the count as a function of y");

    auto* chi = app.add_subcommand("chi", "chi_y evaluation: vertex sum against lattice sum");
    add_source(chi);
    chi->add_option("--y", o.y, "rational y != -1")->required();
    chi->add_option("--z", o.z, "comma-separated nonzero rationals z_1,...,z_n")->required();

    auto* brion = app.add_subcommand("brion", "exact identity of vertex generating functions");
    add_source(brion);

    auto* series = app.add_subcommand("series", "Todd, Lhat, Hirzebruch series and their identities");
    series->add_option("--order", o.order, "truncation order K");
    series->add_option("--y", o.y, "rational y != -1 (default: symbolic)");
    series->add_option("--decimal", o.decimal, "print numbers as decimals with this many digits");

    auto* svg = app.add_subcommand("svg", "SVG figure of the weighted decomposition of a 2-D polytope");
    add_source(svg);
    svg->add_option("--seed", o.seed, "moment-curve seed for the polarizing vector");
    svg->add_option("--y", o.y, "rational y != -1 (default 0)");
    svg->add_option("--out", o.out_path, "output path ('-' for stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    RunReport report(out, o.decimal);
    std::string echo;
    for (const auto& a : args)
        echo += (echo.empty() ? "" : " ") + a;
    report.field("command", echo);

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        if (app.got_subcommand(vertices))
            cmd_vertices(o, report);
        else if (app.got_subcommand(decompose))
            code = cmd_decompose(o, report);
        else if (app.got_subcommand(count))
            code = cmd_count(o, report);
        else if (app.got_subcommand(chi))
            code = cmd_chi(o, report);
        else if (app.got_subcommand(brion))
            code = cmd_brion(o, report);
        else if (app.got_subcommand(series))
            code = cmd_series(o, report);
        else if (app.got_subcommand(svg))
            code = cmd_svg(o, report);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "time: " << secs << " s\n";
    return code;
}

} // namespace wpd::cli
