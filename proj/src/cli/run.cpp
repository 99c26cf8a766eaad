#include "gmoments/cli.hpp"

#include "format.hpp"
#include "gmoments/cfrac.hpp"
#include "gmoments/error.hpp"
#include "gmoments/examples.hpp"
#include "gmoments/pipeline.hpp"
#include "gmoments/series.hpp"
#include "gmoments/triangle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace gmoments::cli {

namespace {

constexpr const char* footer =
    "Sequences are S-fraction coefficients a_1, a_2, ... (1-indexed); moments mu_0, mu_1, ...\n"
    "and Hankel values h_0, h_1, ... are 0-indexed.\n"
    "Spec forms: lit:v1,v2,...  const:v  cycle:p1,...  prefix:v1,...|cycle:p1,...  qpow\n"
    "Examples: const:1 gives the Catalan numbers (A000108), cycle:1,2 the little Schroeder\n"
    "numbers (A001003), qpow the q-Catalan numbers; their matrices include A033184,\n"
    "A039599 and A172094.\n"
    "Exit status: 0 ok, 1 verification failure, 2 usage or parse error, 3 mathematical\n"
    "precondition failure.";

struct Options {
    std::string format = "pretty";
    bool q_symbolic = false;
    std::string q_text;
    std::string out_path;

    std::string spec;
    std::size_t size = 6;
    std::size_t count = 8;
    std::string what = "all";
    std::string method = "both";
    std::string moments;
    std::string g;
    std::string f;
    bool inverse = false;
    std::string example;
};

Format format_of(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::pretty;
}

std::optional<Integer> q_value(const Options& o) {
    if (o.q_text.empty()) return std::nullopt;
    if (o.q_symbolic) throw UsageError("--q and --q-symbolic are mutually exclusive");
    Scalar v;
    try {
        v = demote(parse_scalar(o.q_text));
    } catch (const ParseError& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
    if (!v.is_integral()) throw UsageError("--q expects an integer, got " + o.q_text);
    return std::get<Integer>(v.storage());
}

void gen(const Options& o, std::ostream& out) {
    const SequenceSpec spec = parse_spec(o.spec);
    const auto v = q_value(o);
    const std::size_t n = o.size;
    if (n == 0) throw UsageError("--size must be positive");
    const SFractionCoeffs a = spec.coefficients(2 * n, v);

    std::vector<MatrixBlock> blocks;
    if (o.what == "N") {
        blocks.push_back(block_of("N", build_N_via_behead(a, n)));
    } else if (o.what == "M") {
        blocks.push_back(block_of("M", build_M(a, n)));
    } else if (o.what == "prodN") {
        blocks.push_back(block_of("prodN", production_of(build_N_via_behead(a, n))));
    } else if (o.what == "prodM") {
        blocks.push_back(block_of("prodM", production_of(build_M(a, n))));
    } else {
        const ComparisonResult r = compare(a, n);
        if (o.what == "C") blocks.push_back(block_of("C", r.C));
        if (o.what == "prodC") blocks.push_back(block_of("prodC", r.prodC));
        if (o.what == "prodCinv") blocks.push_back(block_of("prodCinv", r.prodCinv));
        if (o.what == "all") {
            blocks.push_back(block_of("N", r.N));
            blocks.push_back(block_of("M", r.M));
            blocks.push_back(block_of("C", r.C));
            blocks.push_back(block_of("prodN", r.prodN));
            blocks.push_back(block_of("prodM", r.prodM));
            blocks.push_back(block_of("prodC", r.prodC));
            blocks.push_back(block_of("prodCinv", r.prodCinv));
        }
    }
    write_matrices(out, format_of(o.format), blocks);
}

void moments(const Options& o, std::ostream& out) {
    const SequenceSpec spec = parse_spec(o.spec);
    const SFractionCoeffs a = spec.coefficients(o.count, q_value(o));
    ListBlock b{0, "n", {"mu"}, {moments_from_sfraction(a, o.count)}};
    write_lists(out, format_of(o.format), b);
}

void hankel(const Options& o, std::ostream& out) {
    const SequenceSpec spec = parse_spec(o.spec);
    const std::size_t m = o.count;
    const SFractionCoeffs a = spec.coefficients(m ? 2 * (m - 1) : 0, q_value(o));
    ListBlock b{0, "n", {}, {}};
    if (o.method == "det" || o.method == "both") {
        const std::vector<Scalar> mu = moments_from_sfraction(a, m ? 2 * m - 1 : 0);
        b.names.push_back("det");
        b.columns.push_back(hankel_transform(mu, m));
    }
    if (o.method == "product" || o.method == "both") {
        b.names.push_back("product");
        b.columns.push_back(hankel_from_sfraction(a, m));
    }
    write_lists(out, format_of(o.format), b);
    if (b.columns.size() == 2 && b.columns[0] != b.columns[1])
        throw CheckFailure("Hankel determinants and the continued-fraction product disagree");
}

void qd(const Options& o, std::ostream& out) {
    std::vector<Scalar> mu;
    try {
        const SequenceSpec s = parse_spec("lit:" + o.moments);
        mu = s.coefficients(*s.length()).a;
    } catch (const ParseError& e) {
        const std::string what = e.what();
        throw ParseError(e.offset() >= 4 ? e.offset() - 4 : 0,
                         "--moments: " + what.substr(0, what.rfind(" at offset")));
    }
    if (const auto v = q_value(o))
        for (Scalar& s : mu) s = demote(eval_q(s, *v));
    SFractionCoeffs a = qd_sfraction_from_moments(mu);
    for (Scalar& s : a.a) s = demote(s);
    ListBlock b{1, "n", {"a"}, {a.a}};
    write_lists(out, format_of(o.format), b);
}

void riordan(const Options& o, std::ostream& out) {
    const std::size_t n = o.size;
    const TruncatedSeries g = series_from_function(parse_scalar(o.g, 'x'), n + 1);
    const TruncatedSeries f = series_from_function(parse_scalar(o.f, 'x'), n + 1);
    RiordanPair p(g, f);
    if (o.inverse) p = riordan_inverse(p);
    Triangle t = riordan_matrix(p, n);
    Triangle::Rows rows;
    for (const auto& r : t.rows()) {
        std::vector<Scalar> e;
        for (const Scalar& s : r) e.push_back(demote(s));
        rows.push_back(std::move(e));
    }
    write_matrices(out, format_of(o.format), {block_of("riordan", Triangle::from_rows(rows))});
}

void verify(const Options& o, std::ostream& out) {
    const VerifyReport r = verify_example(o.example, o.size, q_value(o));
    write_report(out, format_of(o.format), r);
    if (!r.passed())
        throw CheckFailure(o.example + ": " + std::to_string(r.count(CheckStatus::fail)) +
                           " check(s) failed");
}

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

int report(std::ostream& err, const char* kind, const std::string& what, int code) {
    err << "error: " << kind << ": " << one_line(what) << '\n';
    return code;
}

}  // namespace

int report_error(std::exception_ptr e, std::ostream& err) {
    try {
        std::rethrow_exception(e);
    } catch (const CheckFailure& x) {
        return report(err, "check", x.what(), 1);
    } catch (const CLI::ParseError& x) {
        return report(err, "usage", x.what(), 2);
    } catch (const ParseError& x) {
        return report(err, "parse", x.what(), 2);
    } catch (const std::invalid_argument& x) {
        return report(err, "usage", x.what(), 2);
    } catch (const MathError& x) {
        return report(err, "math", x.what(), 3);
    } catch (const std::exception& x) {
        return report(err, "internal", x.what(), 3);
    } catch (...) {
        return report(err, "internal", "unknown exception", 3);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Compare the moment matrices N and M built from an S-fraction sequence.",
                 "gmoments"};
    app.footer(footer);
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "pretty, json or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_flag("--q-symbolic", o.q_symbolic, "keep q unevaluated (the default)");
    app.add_option("--q", o.q_text, "substitute this integer for q");
    app.add_option("--out", o.out_path, "write the result to FILE");

    auto* gen_cmd = app.add_subcommand("gen", "build N, M, N^-1 M and production matrices");
    gen_cmd->add_option("--spec", o.spec, "coefficient sequence")->required();
    gen_cmd->add_option("--size", o.size, "number of rows")->required();
    gen_cmd->add_option("--what", o.what, "N, M, C, prodN, prodM, prodC, prodCinv or all")
        ->check(CLI::IsMember({"N", "M", "C", "prodN", "prodM", "prodC", "prodCinv", "all"}));

    auto* mom_cmd = app.add_subcommand("moments", "moments of the S-fraction");
    mom_cmd->add_option("--spec", o.spec, "coefficient sequence")->required();
    mom_cmd->add_option("--count", o.count, "number of moments")->required();

    auto* hank_cmd = app.add_subcommand("hankel", "Hankel transform of the moments");
    hank_cmd->add_option("--spec", o.spec, "coefficient sequence")->required();
    hank_cmd->add_option("--count", o.count, "number of values")->required();
    hank_cmd->add_option("--method", o.method, "det, product or both")
        ->check(CLI::IsMember({"det", "product", "both"}));

    auto* qd_cmd = app.add_subcommand("qd", "S-fraction coefficients of a moment sequence");
    qd_cmd->add_option("--moments", o.moments, "mu_0,mu_1,... with mu_0 = 1")->required();

    auto* rio_cmd = app.add_subcommand("riordan", "Riordan array of rational g and f in x");
    rio_cmd->add_option("--g", o.g, "g(x), e.g. 1/(1+x)")->required();
    rio_cmd->add_option("--f", o.f, "f(x), e.g. x/(1+x)^2")->required();
    rio_cmd->add_option("--size", o.size, "number of rows")->required();
    rio_cmd->add_flag("--inverse", o.inverse, "print the inverse array");

    auto* ver_cmd = app.add_subcommand("verify", "check a worked example against its displays");
    ver_cmd->add_option("--example", o.example, "catalan, qcase or schroder")
        ->required()
        ->check(CLI::IsMember({"catalan", "qcase", "schroder"}));
    ver_cmd->add_option("--size", o.size, "matrix size");

    std::vector<const char*> argv{"gmoments"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError&) {
        return report_error(std::current_exception(), err);
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        if (*gen_cmd) gen(o, buffer);
        if (*mom_cmd) moments(o, buffer);
        if (*hank_cmd) hankel(o, buffer);
        if (*qd_cmd) qd(o, buffer);
        if (*rio_cmd) riordan(o, buffer);
        if (*ver_cmd) verify(o, buffer);
    } catch (const CheckFailure&) {
        code = report_error(std::current_exception(), err);
    } catch (...) {
        return report_error(std::current_exception(), err);
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path);
        if (!file) return report(err, "usage", "cannot open " + o.out_path + " for writing", 2);
        file << buffer.str();
    }
    return code;
}

}  // namespace gmoments::cli
