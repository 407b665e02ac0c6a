#include "ltpss/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_double(const std::string& cell, const std::string& where) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw IoError("non-numeric cell '" + cell + "' at " + where);
    }
    if (!std::isfinite(value)) {
        throw IoError("non-finite value at " + where);
    }
    return value;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

ReturnsPanel load_returns_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    const auto header = split_line(lines[0]);
    if (header.size() < 2 || header[0] != "date") {
        throw IoError(path + ": header must be 'date,<asset>,...'");
    }
    if (lines.size() < 2) throw IoError(path + ": no data rows");

    ReturnsPanel panel;
    panel.asset_names.assign(header.begin() + 1, header.end());
    const auto n_assets = static_cast<Eigen::Index>(panel.asset_names.size());
    panel.returns.resize(static_cast<Eigen::Index>(lines.size() - 1), n_assets);

    std::set<std::string> seen;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_line(lines[i]);
        const std::string where = path + ":" + std::to_string(i + 1);
        if (cells.size() != header.size()) {
            throw IoError("ragged row at " + where);
        }
        if (!seen.insert(cells[0]).second) {
            throw IoError("duplicate date '" + cells[0] + "' at " + where);
        }
        panel.dates.push_back(cells[0]);
        for (Eigen::Index j = 0; j < n_assets; ++j) {
            const double v = parse_double(cells[static_cast<size_t>(j) + 1], where);
            if (v <= -1.0) {
                throw IoError("return <= -1 for asset '" + panel.asset_names[j] +
                              "' at " + where);
            }
            panel.returns(static_cast<Eigen::Index>(i - 1), j) = v;
        }
    }
    return panel;
}

FactorPanel load_factors_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    const std::vector<std::string> expected = {"date", "MKT", "SMB", "HML",
                                               "RMW", "CMA", "RF"};
    const auto header = split_line(lines[0]);
    if (header.size() != expected.size()) {
        throw IoError(path + ": header must be 'date,MKT,SMB,HML,RMW,CMA,RF'");
    }
    for (size_t j = 0; j < expected.size(); ++j) {
        if (header[j] != expected[j]) {
            throw IoError(path + ": missing or misplaced column '" + expected[j] + "'");
        }
    }
    if (lines.size() < 2) throw IoError(path + ": no data rows");

    FactorPanel panel;
    panel.factors.resize(static_cast<Eigen::Index>(lines.size() - 1), 5);
    panel.rf.resize(static_cast<Eigen::Index>(lines.size() - 1));
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_line(lines[i]);
        const std::string where = path + ":" + std::to_string(i + 1);
        if (cells.size() != expected.size()) throw IoError("ragged row at " + where);
        if (!panel.dates.empty() && cells[0] <= panel.dates.back()) {
            throw IoError("dates must be strictly increasing at " + where);
        }
        panel.dates.push_back(cells[0]);
        for (Eigen::Index j = 0; j < 5; ++j) {
            panel.factors(static_cast<Eigen::Index>(i - 1), j) =
                parse_double(cells[static_cast<size_t>(j) + 1], where);
        }
        panel.rf(static_cast<Eigen::Index>(i - 1)) = parse_double(cells[6], where);
    }
    return panel;
}

Matrix load_matrix_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw IoError(path + ": empty file");
    const auto n = static_cast<Eigen::Index>(lines.size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto cells = split_line(lines[static_cast<size_t>(i)]);
        const std::string where = path + ":" + std::to_string(i + 1);
        if (static_cast<Eigen::Index>(cells.size()) != n) {
            throw IoError("matrix must be square at " + where + " (expected " +
                          std::to_string(n) + " columns)");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = parse_double(cells[static_cast<size_t>(j)], where);
        }
    }
    return m;
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << (j ? "," : "") << buf;
        }
        out << "\n";
    }
}

void write_trace_csv(const SolverTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "iter,objective,gap,log10_obj_decrease\n";
    char buf[64];
    for (size_t i = 0; i < trace.records.size(); ++i) {
        const auto& rec = trace.records[i];
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,", rec.k, rec.objective,
                      rec.fixed_point_gap);
        out << buf;
        if (i + 1 < trace.records.size()) {
            const double dec = rec.objective - trace.records[i + 1].objective;
            if (dec > 0.0) {
                std::snprintf(buf, sizeof(buf), "%.17g", std::log10(dec));
                out << buf;
            }
        }
        out << "\n";
    }
}

void write_strategy_returns_csv(const StrategyReturns& sr, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "date,return\n";
    for (size_t i = 0; i < sr.values.size(); ++i) {
        out << sr.dates[i] << "," << fmt(sr.values[i], 10) << "\n";
    }
}

void write_report_csv(const BacktestReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "strategy,MR,SR,IR,alpha,pvalue,MDD\n";
    for (const auto& row : report.rows) {
        out << row.strategy << "," << fmt(row.mr, 6) << ","
            << (row.sr ? fmt(*row.sr, 6) : "") << ","
            << (row.ir ? fmt(*row.ir, 6) : "") << ","
            << (row.alpha ? fmt(*row.alpha, 6) : "") << ","
            << (row.pvalue ? fmt(*row.pvalue, 6) : "") << "," << fmt(row.mdd, 6)
            << "\n";
    }
}

BacktestReport read_report_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || lines[0] != "strategy,MR,SR,IR,alpha,pvalue,MDD") {
        throw IoError(path + ": bad report header");
    }
    BacktestReport report;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_line(lines[i]);
        const std::string where = path + ":" + std::to_string(i + 1);
        if (cells.size() != 7) throw IoError("ragged row at " + where);
        ReportRow row;
        row.strategy = cells[0];
        row.mr = parse_double(cells[1], where);
        if (!cells[2].empty()) row.sr = parse_double(cells[2], where);
        if (!cells[3].empty()) row.ir = parse_double(cells[3], where);
        if (!cells[4].empty()) row.alpha = parse_double(cells[4], where);
        if (!cells[5].empty()) row.pvalue = parse_double(cells[5], where);
        row.mdd = parse_double(cells[6], where);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace ltpss
