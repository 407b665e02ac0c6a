#include "ltpss/strategies.hpp"

#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

PredictionMatrix PredictionMatrix::from_matrix(Matrix pi_hat, int window) {
    require_square_finite(pi_hat, "PredictionMatrix");
    PredictionMatrix pm;
    pm.dec = svd(pi_hat.transpose());
    pm.pi_hat = std::move(pi_hat);
    pm.window = window;
    return pm;
}

PredictionMatrix estimate_prediction_matrix(const std::vector<Vector>& signals,
                                            const std::vector<Vector>& returns,
                                            int window) {
    if (window < 1) {
        throw ValidationError("estimate_prediction_matrix: window must be positive");
    }
    if (signals.size() != returns.size()) {
        throw ValidationError("estimate_prediction_matrix: signal/return count mismatch");
    }
    if (signals.size() < static_cast<size_t>(window)) {
        throw ValidationError("estimate_prediction_matrix: need at least " +
                              std::to_string(window) + " aligned pairs, got " +
                              std::to_string(signals.size()));
    }
    const Eigen::Index n = signals.front().size();
    Matrix sum = Matrix::Zero(n, n);
    const size_t start = signals.size() - static_cast<size_t>(window);
    for (size_t j = start; j < signals.size(); ++j) {
        if (signals[j].size() != n || returns[j].size() != n) {
            throw ValidationError("estimate_prediction_matrix: asset dimension mismatch");
        }
        sum += returns[j] * signals[j].transpose();
    }
    return PredictionMatrix::from_matrix(sum / static_cast<double>(window), window);
}

TradingPosition ltp_sf(Eigen::Index n) {
    if (n < 1) throw ValidationError("ltp_sf: dimension must be positive");
    return {Matrix::Identity(n, n), "sf"};
}

TradingPosition ltp_cf(const PredictionMatrix& pm) {
    const auto n = pm.dim();
    const double rank_tol =
        static_cast<double>(n) * (pm.dec.sigma.size() ? pm.dec.sigma(0) : 0.0) * 1e-12;
    Vector d(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d(i) = pm.dec.sigma(i) > rank_tol ? 1.0 : 0.0;
    }
    return {pm.dec.u * d.asDiagonal() * pm.dec.v.transpose(), "cf"};
}

TradingPosition ltp_pp(const PredictionMatrix& pm, int l_count) {
    if (l_count < 1 || l_count > pm.dim()) {
        throw ValidationError("ltp_pp: l_count out of range [1, N]");
    }
    Matrix l = Matrix::Zero(pm.dim(), pm.dim());
    for (int i = 0; i < l_count; ++i) {
        l += pm.dec.u.col(i) * pm.dec.v.col(i).transpose();
    }
    return {std::move(l), "pp:" + std::to_string(l_count)};
}

TradingPosition pp_component(const PredictionMatrix& pm, int n) {
    if (n < 1 || n > pm.dim()) {
        throw ValidationError("pp_component: index out of range [1, N]");
    }
    Matrix l = pm.dec.u.col(n - 1) * pm.dec.v.col(n - 1).transpose();
    return {std::move(l), "ppcomp:" + std::to_string(n)};
}

TradingPosition ltpss(const PredictionMatrix& pm, const SolverParams& params) {
    Solution sol = solve(pm.pi_hat, params);
    return {std::move(sol.position), "ltpss"};
}

}  // namespace ltpss
