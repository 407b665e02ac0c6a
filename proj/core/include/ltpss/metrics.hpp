#pragma once

#include <string>
#include <vector>

#include "ltpss/linalg.hpp"

namespace ltpss {

// Fama-French five factors plus the risk-free rate, one row per trading
// period. The simple-factor strategy return regressor is computed by the
// caller, not stored here.
struct FactorPanel {
    std::vector<std::string> dates;
    Matrix factors;  // columns MKT, SMB, HML, RMW, CMA
    Vector rf;
};

struct RegressionResult {
    Vector coefficients;   // alpha, zeta_0 ... zeta_5
    Vector residuals;
    double residual_std;   // sample std (n-1) of the residual vector
    Vector t_stats;        // estimate / standard error, dof = n - 7
    double r_squared;
    int dof;               // n - 7
};

double mean_return(const std::vector<double>& r);

// (mean - r_f) / sample std (n-1).
double sharpe_ratio(const std::vector<double>& r, double r_f);

// OLS of r on [1, r_sf, MKT, SMB, HML, RMW, CMA] via column-pivoted QR.
RegressionResult ols_ff5(const std::vector<double>& r, const std::vector<double>& r_sf,
                         const FactorPanel& factors);

// alpha / sample std of residuals.
double information_ratio(const RegressionResult& reg);

// One-sided p-value of the alpha t-statistic; upper tail by default
// (testing alpha > 0), lower tail when lower_tail is set.
double alpha_pvalue(const RegressionResult& reg, bool lower_tail = false);

// P(T_dof >= t) through the regularized incomplete beta function.
double student_t_upper_tail(double t, double dof);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Largest peak-to-valley fractional loss of the compounded wealth curve,
// clamped to [0, 1].
double max_drawdown(const std::vector<double>& r);

}  // namespace ltpss
