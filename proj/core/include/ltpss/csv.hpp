#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltpss/backtest.hpp"
#include "ltpss/metrics.hpp"
#include "ltpss/solver.hpp"

namespace ltpss {

// Strict loader: header "date,<asset>..."; body rows are an ISO date followed
// by decimal simple returns. Any non-numeric cell, ragged row, duplicate date
// or return <= -1 is an error.
ReturnsPanel load_returns_csv(const std::string& path);

// Header "date,MKT,SMB,HML,RMW,CMA,RF"; dates strictly increasing.
FactorPanel load_factors_csv(const std::string& path);

// Headerless square numeric CSV.
Matrix load_matrix_csv(const std::string& path);

void write_matrix_csv(const Matrix& m, const std::string& path);

// Columns iter, objective, gap, log10_obj_decrease (blank on the last row or
// when the decrease is not positive).
void write_trace_csv(const SolverTrace& trace, const std::string& path);

void write_strategy_returns_csv(const StrategyReturns& sr, const std::string& path);

struct ReportRow {
    std::string strategy;
    double mr = 0.0;
    std::optional<double> sr;  // absent when the series is degenerate
    std::optional<double> ir;
    std::optional<double> alpha;
    std::optional<double> pvalue;
    double mdd = 0.0;
};

struct BacktestReport {
    std::vector<ReportRow> rows;
};

// Fixed column order strategy,MR,SR,IR,alpha,pvalue,MDD; six fractional
// digits; optional cells left blank.
void write_report_csv(const BacktestReport& report, const std::string& path);

BacktestReport read_report_csv(const std::string& path);

}  // namespace ltpss
