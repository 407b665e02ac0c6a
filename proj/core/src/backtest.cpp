#include "ltpss/backtest.hpp"

#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

void ReturnsPanel::validate() const {
    if (returns.rows() < 2) {
        throw ValidationError("ReturnsPanel: need at least 2 periods");
    }
    if (dates.size() != static_cast<size_t>(returns.rows())) {
        throw ValidationError("ReturnsPanel: date count does not match row count");
    }
    if (!returns.allFinite()) {
        throw NumericalError("ReturnsPanel: non-finite return");
    }
    if ((returns.array() <= -1.0).any()) {
        throw ValidationError("ReturnsPanel: simple return <= -1 is not admissible");
    }
}

std::string StrategySpec::tag() const {
    switch (kind) {
        case Kind::sf: return "sf";
        case Kind::cf: return "cf";
        case Kind::pp: return "pp:" + std::to_string(order);
        case Kind::pp_component: return "ppcomp:" + std::to_string(order);
        case Kind::ltpss: return "ltpss";
    }
    return "?";
}

ReturnsPanel accumulate(const ReturnsPanel& panel, int k, bool sum_blocks) {
    if (k < 1) throw ValidationError("accumulate: k must be positive");
    if (k == 1) return panel;
    const auto rows = panel.periods();
    if (rows < k) {
        throw ValidationError("accumulate: fewer rows (" + std::to_string(rows) +
                              ") than block size " + std::to_string(k));
    }
    const Eigen::Index blocks = rows / k;
    ReturnsPanel out;
    out.asset_names = panel.asset_names;
    out.returns.resize(blocks, panel.assets());
    out.dates.reserve(static_cast<size_t>(blocks));
    for (Eigen::Index b = 0; b < blocks; ++b) {
        if (sum_blocks) {
            out.returns.row(b) = panel.returns.middleRows(b * k, k).colwise().sum();
        } else {
            out.returns.row(b) =
                (panel.returns.middleRows(b * k, k).array() + 1.0).colwise().prod() - 1.0;
        }
        out.dates.push_back(panel.dates[static_cast<size_t>(b * k + k - 1)]);
    }
    return out;
}

std::pair<std::vector<Vector>, std::vector<Vector>> lagged_signals(const ReturnsPanel& panel) {
    const auto rows = panel.periods();
    if (rows < 2) {
        throw ValidationError("lagged_signals: need at least 2 periods");
    }
    std::vector<Vector> signals;
    std::vector<Vector> realized;
    signals.reserve(static_cast<size_t>(rows - 1));
    realized.reserve(static_cast<size_t>(rows - 1));
    for (Eigen::Index j = 0; j + 1 < rows; ++j) {
        signals.push_back(panel.returns.row(j).transpose());
        realized.push_back(panel.returns.row(j + 1).transpose());
    }
    return {std::move(signals), std::move(realized)};
}

namespace {

Matrix build_position(const StrategySpec& spec, const PredictionMatrix& pm) {
    switch (spec.kind) {
        case StrategySpec::Kind::sf: return ltp_sf(pm.dim()).l;
        case StrategySpec::Kind::cf: return ltp_cf(pm).l;
        case StrategySpec::Kind::pp: return ltp_pp(pm, spec.order).l;
        case StrategySpec::Kind::pp_component: return pp_component(pm, spec.order).l;
        case StrategySpec::Kind::ltpss: return ltpss(pm, spec.solver).l;
    }
    throw ValidationError("build_position: unknown strategy kind");
}

}  // namespace

StrategyReturns run(const ReturnsPanel& raw_panel, const BacktestConfig& config) {
    raw_panel.validate();
    if (config.window < 1) throw ValidationError("run: window must be positive");

    const ReturnsPanel panel =
        accumulate(raw_panel, config.accumulation, config.sum_accumulate);
    const auto rows = panel.periods();
    const Eigen::Index t_first = config.window;
    const Eigen::Index t_last = rows - 2;
    if (t_first > t_last) {
        throw ValidationError("run: insufficient history, need at least " +
                              std::to_string(config.window + 2) +
                              " trading periods after accumulation, have " +
                              std::to_string(rows));
    }

    auto [signals, realized] = lagged_signals(panel);

    StrategyReturns out;
    out.dates.reserve(static_cast<size_t>(t_last - t_first + 1));
    out.values.reserve(static_cast<size_t>(t_last - t_first + 1));

    const bool needs_pi = config.strategy.kind != StrategySpec::Kind::sf;
    for (Eigen::Index t = t_first; t <= t_last; ++t) {
        Matrix position;
        if (needs_pi) {
            // Pairs tau = t - T ... t - 1, the last realized return being row t.
            std::vector<Vector> s_win(signals.begin() + (t - config.window),
                                      signals.begin() + t);
            std::vector<Vector> r_win(realized.begin() + (t - config.window),
                                      realized.begin() + t);
            PredictionMatrix pm = estimate_prediction_matrix(s_win, r_win, config.window);
            position = build_position(config.strategy, pm);
        } else {
            position = Matrix::Identity(panel.assets(), panel.assets());
        }
        const Vector s_t = panel.returns.row(t).transpose();
        const Vector r_next = panel.returns.row(t + 1).transpose();
        out.values.push_back(s_t.dot(position * r_next));
        out.dates.push_back(panel.dates[static_cast<size_t>(t + 1)]);
        ++out.positions_count;
    }
    return out;
}

}  // namespace ltpss
