#include "ltpss/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

namespace {

double sample_std(const Vector& x) {
    const auto n = x.size();
    const double mean = x.mean();
    return std::sqrt((x.array() - mean).square().sum() / static_cast<double>(n - 1));
}

Vector to_vector(const std::vector<double>& x) {
    return Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size()));
}

}  // namespace

double mean_return(const std::vector<double>& r) {
    if (r.empty()) throw ValidationError("mean_return: empty series");
    return to_vector(r).mean();
}

double sharpe_ratio(const std::vector<double>& r, double r_f) {
    if (r.size() < 2) throw ValidationError("sharpe_ratio: need at least 2 returns");
    const Vector v = to_vector(r);
    const double s = sample_std(v);
    if (s <= 0.0) throw NumericalError("sharpe_ratio: zero return variance");
    return (v.mean() - r_f) / s;
}

RegressionResult ols_ff5(const std::vector<double>& r, const std::vector<double>& r_sf,
                         const FactorPanel& factors) {
    const auto n = static_cast<Eigen::Index>(r.size());
    constexpr Eigen::Index kParams = 7;
    if (static_cast<Eigen::Index>(r_sf.size()) != n ||
        factors.factors.rows() != n) {
        throw ValidationError("ols_ff5: series/factor length mismatch");
    }
    if (factors.factors.cols() != 5) {
        throw ValidationError("ols_ff5: factor panel must have 5 columns");
    }
    if (n <= kParams) {
        throw ValidationError("ols_ff5: need more than 7 observations, got " +
                              std::to_string(n));
    }

    Matrix x(n, kParams);
    x.col(0).setOnes();
    x.col(1) = to_vector(r_sf);
    x.rightCols(5) = factors.factors;
    const Vector y = to_vector(r);

    Eigen::ColPivHouseholderQR<Matrix> qr(x);
    if (qr.rank() < kParams) {
        throw NumericalError("ols_ff5: singular design matrix");
    }

    RegressionResult out;
    out.coefficients = qr.solve(y);
    out.residuals = y - x * out.coefficients;
    out.dof = static_cast<int>(n - kParams);
    out.residual_std = sample_std(out.residuals);

    const double sigma2 = out.residuals.squaredNorm() / static_cast<double>(out.dof);
    const Matrix xtx_inv = (x.transpose() * x).inverse();
    out.t_stats.resize(kParams);
    for (Eigen::Index j = 0; j < kParams; ++j) {
        out.t_stats(j) = out.coefficients(j) / std::sqrt(sigma2 * xtx_inv(j, j));
    }

    const double tss = (y.array() - y.mean()).square().sum();
    out.r_squared = tss > 0.0 ? 1.0 - out.residuals.squaredNorm() / tss : 1.0;
    return out;
}

double information_ratio(const RegressionResult& reg) {
    if (reg.residual_std <= 0.0) {
        throw NumericalError("information_ratio: zero residual std (perfect fit)");
    }
    return reg.coefficients(0) / reg.residual_std;
}

double incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0) throw ValidationError("incomplete_beta: x must be in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    // I_x(a,b) = front * cf / a, with the symmetry flip for convergence.
    if (x > (a + 1.0) / (a + b + 2.0)) {
        return 1.0 - incomplete_beta(b, a, 1.0 - x);
    }

    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));

    // Lentz's continued fraction.
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    double f = 1.0;
    double c = 1.0;
    double d = 0.0;
    for (int i = 0; i <= 500; ++i) {
        const int m = i / 2;
        double numerator;
        if (i == 0) {
            numerator = 1.0;
        } else if (i % 2 == 0) {
            numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
        } else {
            numerator = -(a + m) * (a + b + m) * x / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
        }
        d = 1.0 + numerator * d;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = 1.0 + numerator / c;
        if (std::abs(c) < tiny) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(1.0 - delta) < eps) {
            return front * (f - 1.0) / a;
        }
    }
    throw NumericalError("incomplete_beta: continued fraction did not converge");
}

double student_t_upper_tail(double t, double dof) {
    if (dof < 1.0) throw ValidationError("student_t_upper_tail: dof must be >= 1");
    if (std::isinf(t)) return t > 0.0 ? 0.0 : 1.0;
    const double x = dof / (dof + t * t);
    const double half_two_sided = 0.5 * incomplete_beta(0.5 * dof, 0.5, x);
    return t >= 0.0 ? half_two_sided : 1.0 - half_two_sided;
}

double alpha_pvalue(const RegressionResult& reg, bool lower_tail) {
    if (reg.dof < 1) throw ValidationError("alpha_pvalue: dof must be >= 1");
    const double t = reg.t_stats(0);
    return lower_tail ? student_t_upper_tail(-t, reg.dof)
                      : student_t_upper_tail(t, reg.dof);
}

double max_drawdown(const std::vector<double>& r) {
    if (r.empty()) throw ValidationError("max_drawdown: empty series");
    double wealth = 1.0;
    double peak = 1.0;
    double mdd = 0.0;
    for (const double rt : r) {
        wealth *= 1.0 + rt;
        peak = std::max(peak, wealth);
        mdd = std::max(mdd, (peak - wealth) / peak);
    }
    return std::clamp(mdd, 0.0, 1.0);
}

}  // namespace ltpss
