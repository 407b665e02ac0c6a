// Command-line front end: solve, backtest, ppscan, sweep.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "ltpss/csv.hpp"
#include "ltpss/errors.hpp"

namespace fs = std::filesystem;
using namespace ltpss;

namespace {

struct SolverFlags {
    double beta = 100.0;
    double eta = 0.001;
    double theta = 0.9999;
    double tol = 1e-8;
    int max_iters = 10000;

    void attach(CLI::App* cmd, bool with_eta = true) {
        cmd->add_option("--beta", beta, "KM step size");
        if (with_eta) cmd->add_option("--eta", eta, "nuclear-norm weight");
        cmd->add_option("--theta", theta, "KM averaging parameter in (0,1)");
        cmd->add_option("--tol", tol, "fixed-point gap tolerance");
        cmd->add_option("--max-iters", max_iters, "iteration cap");
    }

    SolverParams params() const {
        SolverParams p;
        p.beta = beta;
        p.eta = eta;
        p.theta = theta;
        p.tol = tol;
        p.max_iters = max_iters;
        return p;
    }
};

StrategySpec parse_strategy(const std::string& spec, const SolverFlags& flags) {
    StrategySpec out;
    out.solver = flags.params();
    if (spec == "sf") {
        out.kind = StrategySpec::Kind::sf;
    } else if (spec == "cf") {
        out.kind = StrategySpec::Kind::cf;
    } else if (spec == "ltpss") {
        out.kind = StrategySpec::Kind::ltpss;
    } else if (spec.rfind("pp:", 0) == 0) {
        out.kind = StrategySpec::Kind::pp;
        out.order = std::stoi(spec.substr(3));
    } else if (spec.rfind("ppcomp:", 0) == 0) {
        out.kind = StrategySpec::Kind::pp_component;
        out.order = std::stoi(spec.substr(7));
    } else {
        throw ValidationError("unknown strategy spec '" + spec +
                              "' (expected sf | cf | pp:l | ppcomp:n | ltpss)");
    }
    return out;
}

// Align the factor panel to the strategy-return dates; every return date must
// be present in the factor file.
struct AlignedFactors {
    FactorPanel panel;
    double mean_rf = 0.0;
};

AlignedFactors align_factors(const FactorPanel& factors, const StrategyReturns& sr) {
    std::unordered_map<std::string, Eigen::Index> index;
    for (size_t i = 0; i < factors.dates.size(); ++i) {
        index.emplace(factors.dates[i], static_cast<Eigen::Index>(i));
    }
    AlignedFactors out;
    out.panel.factors.resize(static_cast<Eigen::Index>(sr.dates.size()), 5);
    out.panel.rf.resize(static_cast<Eigen::Index>(sr.dates.size()));
    for (size_t i = 0; i < sr.dates.size(); ++i) {
        const auto it = index.find(sr.dates[i]);
        if (it == index.end()) {
            throw ValidationError("factor file has no row for trading date '" +
                                  sr.dates[i] + "'");
        }
        out.panel.dates.push_back(sr.dates[i]);
        out.panel.factors.row(static_cast<Eigen::Index>(i)) =
            factors.factors.row(it->second);
        out.panel.rf(static_cast<Eigen::Index>(i)) = factors.rf(it->second);
    }
    out.mean_rf = out.panel.rf.mean();
    return out;
}

ReportRow evaluate_strategy(const StrategyReturns& sr, const std::string& tag,
                            const std::optional<FactorPanel>& factors,
                            const std::optional<StrategyReturns>& sf_returns,
                            std::optional<double> rf_override) {
    ReportRow row;
    row.strategy = tag;
    row.mr = mean_return(sr.values);
    row.mdd = max_drawdown(sr.values);

    double rf = rf_override.value_or(0.0);
    if (factors) {
        const AlignedFactors aligned = align_factors(*factors, sr);
        if (!rf_override) rf = aligned.mean_rf;
        const RegressionResult reg = ols_ff5(sr.values, sf_returns->values, aligned.panel);
        row.ir = information_ratio(reg);
        row.alpha = reg.coefficients(0);
        row.pvalue = alpha_pvalue(reg);
    }
    try {
        row.sr = sharpe_ratio(sr.values, rf);
    } catch (const std::runtime_error&) {
        // degenerate series (too short or zero variance): leave SR blank
    }
    return row;
}

int cmd_solve(const std::string& pi_path, const SolverFlags& flags,
              const std::string& init_spec, const std::string& out_path,
              const std::string& trace_path, bool unconstrained) {
    const Matrix pi_hat = load_matrix_csv(pi_path);
    SolverParams params = flags.params();
    params.drop_projection = unconstrained;
    if (init_spec == "zero") {
        params.initial_position = Matrix::Zero(pi_hat.rows(), pi_hat.cols());
    } else if (init_spec.rfind("pp:", 0) == 0) {
        const int l_count = std::stoi(init_spec.substr(3));
        params.initial_position =
            ltp_pp(PredictionMatrix::from_matrix(pi_hat), l_count).l;
    } else if (!init_spec.empty()) {
        throw ValidationError("unknown --init spec '" + init_spec + "' (pp:l | zero)");
    }

    const Solution sol = solve(pi_hat, params);
    write_matrix_csv(sol.position, out_path);
    if (!trace_path.empty()) {
        write_trace_csv(sol.trace, trace_path);
    }
    if (sol.trace.status == SolverStatus::max_iters) {
        std::cerr << "warning: iteration cap reached before the gap tolerance\n";
    }
    return 0;
}

struct BacktestFlags {
    std::string data_path;
    std::string factors_path;
    std::string strategy = "ltpss";
    int accumulate_k = 1;
    int window = 120;
    std::optional<double> rf_override;
    bool sum_accumulate = false;
    SolverFlags solver;

    void attach(CLI::App* cmd, bool with_strategy) {
        cmd->add_option("--data", data_path, "returns CSV")->required();
        if (with_strategy) {
            cmd->add_option("--factors", factors_path, "Fama-French five-factor CSV");
            cmd->add_option("--strategy", strategy, "sf | cf | pp:l | ppcomp:n | ltpss");
            cmd->add_option("--rf", rf_override, "risk-free rate override");
        }
        cmd->add_option("--accumulate", accumulate_k, "periods merged per trading period");
        cmd->add_option("--window", window, "estimation window T");
        cmd->add_flag("--sum-accumulate", sum_accumulate,
                      "sum block returns instead of compounding");
        solver.attach(cmd, /*with_eta=*/with_strategy);
    }

    BacktestConfig config(const StrategySpec& spec) const {
        BacktestConfig cfg;
        cfg.window = window;
        cfg.accumulation = accumulate_k;
        cfg.sum_accumulate = sum_accumulate;
        cfg.strategy = spec;
        return cfg;
    }
};

int cmd_backtest(const BacktestFlags& flags, const std::string& out_dir) {
    const ReturnsPanel panel = load_returns_csv(flags.data_path);
    const StrategySpec spec = parse_strategy(flags.strategy, flags.solver);
    const StrategyReturns sr = run(panel, flags.config(spec));

    std::optional<FactorPanel> factors;
    std::optional<StrategyReturns> sf_returns;
    if (!flags.factors_path.empty()) {
        factors = load_factors_csv(flags.factors_path);
        if (spec.kind == StrategySpec::Kind::sf) {
            sf_returns = sr;
        } else {
            StrategySpec sf_spec;
            sf_spec.kind = StrategySpec::Kind::sf;
            sf_returns = run(panel, flags.config(sf_spec));
        }
    }

    fs::create_directories(out_dir);
    write_strategy_returns_csv(sr, (fs::path(out_dir) / "strategy_returns.csv").string());

    BacktestReport report;
    report.rows.push_back(
        evaluate_strategy(sr, spec.tag(), factors, sf_returns, flags.rf_override));
    // The regression hedges LTP-SF out, so SF itself carries no IR/alpha row.
    if (spec.kind == StrategySpec::Kind::sf) {
        report.rows[0].ir.reset();
        report.rows[0].alpha.reset();
        report.rows[0].pvalue.reset();
    }
    write_report_csv(report, (fs::path(out_dir) / "report.csv").string());
    return 0;
}

int cmd_ppscan(const BacktestFlags& flags, const std::string& orders_spec,
               const std::string& out_path) {
    int lo = 1;
    int hi = 1;
    const auto dots = orders_spec.find("..");
    if (dots != std::string::npos) {
        lo = std::stoi(orders_spec.substr(0, dots));
        hi = std::stoi(orders_spec.substr(dots + 2));
    } else {
        hi = std::stoi(orders_spec);
    }
    if (lo < 1 || hi < lo) {
        throw ValidationError("bad --orders spec '" + orders_spec + "' (expected a..b)");
    }

    const ReturnsPanel panel = load_returns_csv(flags.data_path);
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << "order,mean_return\n";
    for (int order = lo; order <= hi; ++order) {
        StrategySpec spec;
        spec.kind = StrategySpec::Kind::pp_component;
        spec.order = order;
        const StrategyReturns sr = run(panel, flags.config(spec));
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%d,%.6f\n", order, mean_return(sr.values));
        out << buf;
    }
    return 0;
}

int cmd_sweep(const BacktestFlags& flags, const std::string& eta_list,
              const std::string& out_path) {
    std::vector<double> etas;
    std::stringstream ss(eta_list);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        etas.push_back(std::stod(cell));
    }
    if (etas.empty()) throw ValidationError("--eta list is empty");

    const ReturnsPanel panel = load_returns_csv(flags.data_path);
    const double rf = flags.rf_override.value_or(0.0);
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << "eta,SR\n";
    for (const double eta : etas) {
        SolverFlags sf = flags.solver;
        sf.eta = eta;
        StrategySpec spec;
        spec.kind = StrategySpec::Kind::ltpss;
        spec.solver = sf.params();
        const StrategyReturns sr = run(panel, flags.config(spec));
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g,%.6f\n", eta,
                      sharpe_ratio(sr.values, rf));
        out << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse-spectrum linear trading position toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve for L* from a prediction matrix");
    std::string pi_path, solve_out, trace_path, init_spec;
    bool unconstrained = false;
    SolverFlags solve_flags;
    solve_cmd->add_option("--pi", pi_path, "headerless NxN prediction matrix CSV")->required();
    solve_cmd->add_option("--out", solve_out, "output CSV for L*")->required();
    solve_cmd->add_option("--trace", trace_path, "iteration trace CSV");
    solve_cmd->add_option("--init", init_spec, "initial position: pp:l | zero");
    solve_cmd->add_flag("--unconstrained", unconstrained,
                        "diagnostic: drop the spectral-ball projection");
    solve_flags.attach(solve_cmd);

    // backtest
    auto* bt_cmd = app.add_subcommand("backtest", "rolling-window signal-trading backtest");
    BacktestFlags bt_flags;
    std::string bt_out;
    bt_flags.attach(bt_cmd, true);
    bt_cmd->add_option("--out", bt_out, "output directory")->required();

    // ppscan
    auto* pp_cmd = app.add_subcommand("ppscan", "mean return per principal portfolio");
    BacktestFlags pp_flags;
    std::string orders_spec = "1..10", pp_out;
    pp_flags.attach(pp_cmd, false);
    pp_cmd->add_option("--orders", orders_spec, "PP order range a..b");
    pp_cmd->add_option("--out", pp_out, "output CSV")->required();

    // sweep
    auto* sw_cmd = app.add_subcommand("sweep", "Sharpe ratio per regularization eta");
    BacktestFlags sw_flags;
    std::string eta_list, sw_out;
    sw_flags.attach(sw_cmd, false);
    sw_cmd->add_option("--rf", sw_flags.rf_override, "risk-free rate");
    sw_cmd->add_option("--eta", eta_list, "comma-separated eta values")->required();
    sw_cmd->add_option("--out", sw_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
        if (solve_cmd->parsed()) {
            return cmd_solve(pi_path, solve_flags, init_spec, solve_out, trace_path,
                             unconstrained);
        }
        if (bt_cmd->parsed()) return cmd_backtest(bt_flags, bt_out);
        if (pp_cmd->parsed()) return cmd_ppscan(pp_flags, orders_spec, pp_out);
        if (sw_cmd->parsed()) return cmd_sweep(sw_flags, eta_list, sw_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
