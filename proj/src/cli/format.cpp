#include "format.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace gmoments::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<Scalar> flatten(const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Scalar> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return all;
}

json matrix_json(const MatrixBlock& b) {
    json rows = json::array();
    for (const auto& r : b.rows) {
        json row = json::array();
        for (const Scalar& s : r) row.push_back(to_string(s));
        rows.push_back(std::move(row));
    }
    return json{{"size", b.size}, {"ring", ring_name(flatten(b.rows))}, {"rows", rows}};
}

void write_pretty_rows(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& r : cells)
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (width.size() <= j) width.push_back(0);
            width[j] = std::max(width[j], r[j].size());
        }
    for (const auto& r : cells) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) line += "  ";
            line += std::string(width[j] - r[j].size(), ' ') + r[j];
        }
        out << line << '\n';
    }
}

std::vector<std::vector<std::string>> rendered(const std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> c;
        for (const Scalar& s : r) c.push_back(to_string(s));
        cells.push_back(std::move(c));
    }
    return cells;
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) out << ',';
        const std::string& c = cells[j];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out << c;
            continue;
        }
        out << '"';
        for (char ch : c) {
            if (ch == '"') out << '"';
            out << ch;
        }
        out << '"';
    }
    out << '\n';
}

}  // namespace

std::string ring_name(const std::vector<Scalar>& values) {
    bool rational = false;
    for (const Scalar& s : values) {
        if (s.involves_q()) return "q";
        if (!s.is_integral()) rational = true;
    }
    return rational ? "rat" : "int";
}

MatrixBlock block_of(std::string name, const Triangle& t) {
    MatrixBlock b{std::move(name), t.size(), {}};
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto r = t.row(i);
        b.rows.emplace_back(r.begin(), r.end());
    }
    return b;
}

MatrixBlock block_of(std::string name, const ProductionMatrix& p) {
    MatrixBlock b{std::move(name), p.size(), {}};
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Scalar> r;
        for (std::size_t j = 0; j <= i + 1; ++j) r.push_back(p(i, j));
        b.rows.push_back(std::move(r));
    }
    return b;
}

void write_matrices(std::ostream& out, Format f, const std::vector<MatrixBlock>& blocks) {
    const bool named = blocks.size() > 1;
    if (f == Format::json) {
        if (!named) {
            out << matrix_json(blocks.front()).dump(2) << '\n';
            return;
        }
        json doc = json::object();
        for (const auto& b : blocks) doc[b.name] = matrix_json(b);
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& b = blocks[k];
        if (named) {
            if (k) out << '\n';
            out << "# " << b.name << '\n';
        }
        const auto cells = rendered(b.rows);
        if (f == Format::pretty) {
            write_pretty_rows(out, cells);
        } else {
            for (const auto& r : cells) write_csv_line(out, r);
        }
    }
}

void write_lists(std::ostream& out, Format f, const ListBlock& block) {
    const std::size_t len = block.columns.empty() ? 0 : block.columns.front().size();
    if (f == Format::json) {
        std::vector<Scalar> all;
        for (const auto& c : block.columns) all.insert(all.end(), c.begin(), c.end());
        json doc{{"count", len}, {"first_index", block.first_index}, {"ring", ring_name(all)}};
        for (std::size_t k = 0; k < block.names.size(); ++k) {
            json col = json::array();
            for (const Scalar& s : block.columns[k]) col.push_back(to_string(s));
            doc[block.names[k]] = std::move(col);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{block.index_name};
    header.insert(header.end(), block.names.begin(), block.names.end());
    cells.push_back(header);
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::string> row{std::to_string(block.first_index + i)};
        for (const auto& c : block.columns) row.push_back(to_string(c[i]));
        cells.push_back(std::move(row));
    }
    if (f == Format::pretty) {
        write_pretty_rows(out, cells);
    } else {
        for (const auto& r : cells) write_csv_line(out, r);
    }
}

void write_report(std::ostream& out, Format f, const VerifyReport& report) {
    const std::string q = report.q ? report.q->get_str() : "symbolic";
    if (f == Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"status", to_string(c.status)},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"note", c.note}});
        json doc{{"example", report.example}, {"size", report.size},
                 {"passed", report.passed()}, {"checks", checks}};
        if (report.example == "qcase") doc["q"] = q;
        out << doc.dump(2) << '\n';
        return;
    }
    if (f == Format::csv) {
        write_csv_line(out, {"name", "status", "expected", "actual", "note"});
        for (const auto& c : report.checks)
            write_csv_line(out, {c.name, to_string(c.status), c.expected, c.actual, c.note});
        return;
    }
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, to_string(c.status).size());
    out << report.example << " size " << report.size;
    if (report.example == "qcase") out << " q " << q;
    out << '\n';
    for (const auto& c : report.checks) {
        const std::string s = to_string(c.status);
        out << s << std::string(width - s.size(), ' ') << "  " << c.name << '\n';
        if (c.status != CheckStatus::pass) {
            out << "    expected: " << c.expected << '\n' << "    actual:   " << c.actual << '\n';
            if (!c.note.empty()) out << "    note:     " << c.note << '\n';
        }
    }
    out << report.checks.size() << " checks: " << report.count(CheckStatus::pass) << " pass, "
        << report.count(CheckStatus::fail) << " fail, "
        << report.count(CheckStatus::documented_discrepancy) << " documented discrepancies\n";
}

}  // namespace gmoments::cli
