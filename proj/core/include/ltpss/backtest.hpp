#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ltpss/strategies.hpp"

namespace ltpss {

// Per-period simple returns, rows = periods, columns = assets (0.01 = 1%).
struct ReturnsPanel {
    std::vector<std::string> dates;
    std::vector<std::string> asset_names;
    Matrix returns;

    Eigen::Index periods() const { return returns.rows(); }
    Eigen::Index assets() const { return returns.cols(); }
    void validate() const;
};

struct StrategySpec {
    enum class Kind { sf, cf, pp, pp_component, ltpss };
    Kind kind = Kind::sf;
    int order = 3;        // l for pp, n for pp_component
    SolverParams solver;  // for ltpss

    std::string tag() const;
};

struct BacktestConfig {
    int window = 120;
    StrategySpec strategy;
    int accumulation = 1;
    bool sum_accumulate = false;  // arithmetic-sum blocks instead of compounding
};

struct StrategyReturns {
    std::vector<std::string> dates;
    std::vector<double> values;
    int positions_count = 0;
};

// Merge disjoint blocks of k consecutive rows into one trading period,
// compounding per asset (or summing when sum_blocks). Trailing partial block
// dropped; the block keeps its last date.
ReturnsPanel accumulate(const ReturnsPanel& panel, int k, bool sum_blocks = false);

// signals[j] = row j, paired with the realized return row j+1.
std::pair<std::vector<Vector>, std::vector<Vector>> lagged_signals(const ReturnsPanel& panel);

// Rolling harness: for every tradable t, estimate pi_hat from the trailing
// `window` aligned pairs ending at t-1, build the position, realize
// r_{t+1} = S_t^T L R_{t+1}.
StrategyReturns run(const ReturnsPanel& panel, const BacktestConfig& config);

}  // namespace ltpss
