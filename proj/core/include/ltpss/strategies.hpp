#pragma once

#include <string>
#include <vector>

#include "ltpss/solver.hpp"

namespace ltpss {

struct PredictionMatrix {
    Matrix pi_hat;
    SpectralDecomposition dec;  // of pi_hat^T
    int window = 0;

    static PredictionMatrix from_matrix(Matrix pi_hat, int window = 0);

    Eigen::Index dim() const { return pi_hat.rows(); }
};

struct TradingPosition {
    Matrix l;
    std::string strategy_tag;
};

// pi_hat = (1/T) * sum over the last T aligned pairs of R_{tau+1} S_tau^T.
// returns[j] must be the realized return one period after signals[j].
PredictionMatrix estimate_prediction_matrix(const std::vector<Vector>& signals,
                                            const std::vector<Vector>& returns,
                                            int window);

// Identity position: each asset trades on its own signal only.
TradingPosition ltp_sf(Eigen::Index n);

// The closed-form maximizer of tr(L pi_hat) over the spectral ball, U V^T
// through the decomposition of pi_hat^T, with null directions (sigma below
// N*sigma_1*1e-12) zeroed out.
TradingPosition ltp_cf(const PredictionMatrix& pm);

// Sum of the first l_count rank-one principal portfolios u_n v_n^T.
TradingPosition ltp_pp(const PredictionMatrix& pm, int l_count);

// The n-th rank-one principal portfolio alone (1-based).
TradingPosition pp_component(const PredictionMatrix& pm, int n);

// Sparse-spectrum position from the KM solver.
TradingPosition ltpss(const PredictionMatrix& pm, const SolverParams& params);

}  // namespace ltpss
