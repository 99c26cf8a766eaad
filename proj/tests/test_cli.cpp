#include "cli_cases.hpp"
#include "gmoments/cli.hpp"
#include "gmoments/error.hpp"
#include "gmoments/pipeline.hpp"

#include <doctest.h>
#include <json.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gmoments;
using json = nlohmann::json;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Triangle triangle_from_json(const json& m) {
    Triangle::Rows rows;
    for (const auto& r : m.at("rows")) {
        std::vector<Scalar> row;
        for (const auto& e : r) row.push_back(parse_scalar(e.get<std::string>()));
        rows.push_back(row);
    }
    return Triangle::from_rows(rows);
}

ProductionMatrix production_from_json(const json& m) {
    ProductionMatrix::Rows rows;
    for (const auto& r : m.at("rows")) {
        std::vector<Scalar> row;
        for (const auto& e : r) row.push_back(parse_scalar(e.get<std::string>()));
        rows.push_back(row);
    }
    return ProductionMatrix::from_rows(rows);
}

// Every whitespace- or comma-separated token of a pretty/csv body.
std::vector<std::string> cells(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.empty() || line[0] == '#') continue;
        if (sep == ',') {
            std::string cell;
            bool quoted = false;
            for (char c : line) {
                if (c == '"') {
                    quoted = !quoted;
                } else if (c == ',' && !quoted) {
                    out.push_back(cell);
                    cell.clear();
                } else {
                    cell += c;
                }
            }
            out.push_back(cell);
        } else {
            // Pretty columns are separated by two or more spaces.
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && line[i] == ' ') ++i;
                std::size_t j = i;
                while (j < line.size() && !(line[j] == ' ' && (j + 1 < line.size() && line[j + 1] == ' ')) )
                    ++j;
                if (j > i) {
                    std::string cell = line.substr(i, j - i);
                    while (!cell.empty() && cell.back() == ' ') cell.pop_back();
                    out.push_back(cell);
                }
                i = j;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("sequence specs") {
    const auto c = cli::parse_spec("const:1");
    CHECK(c.coefficients(5).a == ints({1, 1, 1, 1, 1}));
    CHECK_FALSE(c.length().has_value());

    CHECK(cli::parse_spec("cycle:1,2").coefficients(6).a == ints({1, 2, 1, 2, 1, 2}));
    CHECK(cli::parse_spec("prefix:1|cycle:1,2").coefficients(5).a == ints({1, 1, 2, 1, 2}));
    CHECK(cli::parse_spec("prefix:7,8|cycle:3")(4) == Scalar(3));

    const auto q = cli::parse_spec("qpow");
    CHECK(q(1) == Scalar(1));
    CHECK(q(3) == Scalar::q_power(2));
    CHECK(q.coefficients(4, Integer(2)).a == ints({1, 2, 4, 8}));

    const auto lit = cli::parse_spec("lit:1,q,-1/2");
    CHECK(lit.length() == std::size_t{3});
    CHECK(lit(3) == Scalar(Rational(-1, 2)));
    CHECK_THROWS_AS(lit(4), MathError);
    CHECK(lit.coefficients(10).size() == 3);

    auto offset_of = [](const char* text) -> long {
        try {
            cli::parse_spec(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("cycle:") == 6);
    CHECK(offset_of("lit:1,,2") == 6);
    CHECK(offset_of("lit:1,2+") == 8);
    CHECK(offset_of("prefix:1|cycle:") == 15);
    CHECK(offset_of("prefix:1") == 8);
    CHECK(offset_of("poly:1") == 0);
    CHECK(offset_of("const:1,2") == 6);
}

TEST_CASE("golden outputs") {
    for (const auto& c : cli_cases::golden_cases()) {
        INFO(c.file);
        const auto r = cli_cases::run(c.args);
        CHECK(r.status == c.status);
        CHECK(r.transcript() == cli_cases::read_golden(c.file));
        if (c.status != 0) {
            CHECK(r.out.empty());
            CHECK(r.err.rfind("error: ", 0) == 0);
            CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        }
    }
}

TEST_CASE("JSON round-trip") {
    for (const char* spec : {"const:1", "qpow", "cycle:1,2", "lit:1,3,1/2,2,5,7,2,3,4,1"}) {
        INFO(spec);
        const auto r = cli_cases::run({"--format", "json", "gen", "--spec", spec, "--size", "5"});
        REQUIRE(r.status == 0);
        const json doc = json::parse(r.out);
        const SFractionCoeffs a = cli::parse_spec(spec).coefficients(10);
        const ComparisonResult expected = compare(a, 5);
        CHECK(triangle_from_json(doc.at("N")) == expected.N);
        CHECK(triangle_from_json(doc.at("M")) == expected.M);
        CHECK(triangle_from_json(doc.at("C")) == expected.C);
        CHECK(production_from_json(doc.at("prodN")) == expected.prodN);
        CHECK(production_from_json(doc.at("prodM")) == expected.prodM);
        CHECK(production_from_json(doc.at("prodC")) == expected.prodC);
        CHECK(production_from_json(doc.at("prodCinv")) == expected.prodCinv);
        CHECK(doc.at("N").at("size") == 5);
    }
    const auto m = cli_cases::run({"--format", "json", "moments", "--spec", "qpow", "--count", "5"});
    const json doc = json::parse(m.out);
    std::vector<Scalar> mu;
    for (const auto& e : doc.at("mu")) mu.push_back(parse_scalar(e.get<std::string>()));
    CHECK(mu == moments_from_sfraction(qpow_coefficients(5), 5));
    CHECK(doc.at("ring") == "q");
}

TEST_CASE("all formats render the same entries") {
    for (const char* spec : {"const:1", "qpow", "cycle:1,2"}) {
        for (const char* what : {"N", "M", "C", "prodCinv"}) {
            INFO(spec << " " << what);
            auto args = [&](const char* fmt) {
                return std::vector<std::string>{"--format", fmt, "gen", "--spec", spec,
                                                "--size", "5", "--what", what};
            };
            const json doc = json::parse(cli_cases::run(args("json")).out);
            std::vector<std::string> from_json;
            for (const auto& row : doc.at("rows"))
                for (const auto& e : row) from_json.push_back(e.get<std::string>());
            CHECK(cells(cli_cases::run(args("csv")).out, ',') == from_json);
            CHECK(cells(cli_cases::run(args("pretty")).out, ' ') == from_json);
        }
    }
}

TEST_CASE("hankel methods agree") {
    for (const char* spec : {"const:1", "qpow", "cycle:1,2", "lit:4,4,16,24,64,112,1,1",
                             "lit:1,-2,3,5,-1,2,7,1", "const:1/3"}) {
        INFO(spec);
        const auto r = cli_cases::run({"--format", "json", "hankel", "--spec", spec, "--count", "5"});
        REQUIRE(r.status == 0);
        const json doc = json::parse(r.out);
        CHECK(doc.at("det") == doc.at("product"));
    }
    const json chain = json::parse(cli_cases::run({"--format", "json", "hankel", "--spec",
                                                   "lit:4,4,16,24,64,112", "--count", "3"})
                                       .out);
    CHECK(chain.at("det") == json::array({"1", "16", "98304"}));
}

TEST_CASE("exit statuses") {
    const auto ok = cli_cases::run({"verify", "--example", "qcase", "--q", "2", "--size", "6"});
    CHECK(ok.status == 0);
    CHECK(ok.err.empty());
    std::size_t lines = 0;
    for (std::size_t p = ok.out.find("documented-discrepancy"); p != std::string::npos;
         p = ok.out.find("documented-discrepancy", p + 1))
        if (p == 0 || ok.out[p - 1] == '\n') ++lines;
    CHECK(lines == 2);

    CHECK(cli_cases::run({"--help"}).status == 0);
    CHECK(cli_cases::run({"--help"}).out.find("A000108") != std::string::npos);
    CHECK(cli_cases::run({}).status == 2);
    CHECK(cli_cases::run({"gen", "--spec", "const:1", "--size", "0"}).status == 2);
    CHECK(cli_cases::run({"verify", "--example", "schroder", "--size", "1"}).status == 2);
    CHECK(cli_cases::run({"verify", "--example", "schroder", "--q", "2"}).status == 2);
    CHECK(cli_cases::run({"riordan", "--g", "x", "--f", "x", "--size", "3"}).status == 3);
    CHECK(cli_cases::run({"qd", "--moments", "1,0,1,0"}).status == 3);

    const auto bad = cli_cases::run({"qd", "--moments", "1,2,,4"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("at offset 4") != std::string::npos);

    std::ostringstream err;
    CHECK(cli::report_error(std::make_exception_ptr(cli::CheckFailure("x")), err) == 1);
    CHECK(cli::report_error(std::make_exception_ptr(ParseError(3, "y")), err) == 2);
    CHECK(cli::report_error(std::make_exception_ptr(UsageError("z")), err) == 2);
    CHECK(cli::report_error(std::make_exception_ptr(NotCatalanLike(2, "w")), err) == 3);
    CHECK(cli::report_error(std::make_exception_ptr(std::runtime_error("v")), err) == 3);
    CHECK(err.str().rfind("error: check: x\n", 0) == 0);
    CHECK(err.str().find("error: internal: v\n") != std::string::npos);
}

TEST_CASE("--out writes the file") {
    const auto path = std::filesystem::temp_directory_path() / "gmoments_cli_out_test.csv";
    std::filesystem::remove(path);
    const auto r = cli_cases::run({"--format", "csv", "--out", path.string(), "gen", "--spec",
                                   "const:1", "--what", "C", "--size", "4"});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str() == "1\n0,1\n0,1,1\n0,1,2,1\n");
    std::filesystem::remove(path);
    CHECK(cli_cases::run({"--out", "/nonexistent-dir/x", "moments", "--spec", "const:1", "--count",
                          "2"})
              .status == 2);
}
