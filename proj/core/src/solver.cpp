#include "ltpss/solver.hpp"

#include <algorithm>
#include <cmath>

#include "ltpss/errors.hpp"

namespace ltpss {

void SolverParams::validate() const {
    if (beta <= 0.0) throw ValidationError("SolverParams: beta must be positive");
    if (eta < 0.0) throw ValidationError("SolverParams: eta must be non-negative");
    if (theta <= 0.0 || theta >= 1.0) {
        throw ValidationError("SolverParams: theta must be in (0,1)");
    }
    if (max_iters < 1) throw ValidationError("SolverParams: max_iters must be positive");
    if (tol <= 0.0) throw ValidationError("SolverParams: tol must be positive");
}

double objective(const Matrix& l, const OperatorContext& ctx) {
    if (l.rows() != ctx.dim() || l.cols() != ctx.dim()) {
        throw ValidationError("objective: dimension mismatch");
    }
    return -trace_inner(l.transpose(), ctx.pi_hat) + ctx.eta * norms(l).nuclear;
}

namespace {

Matrix default_initial(const OperatorContext& ctx) {
    const auto n = ctx.dim();
    if (ctx.pi_hat.isZero(0.0)) {
        return Matrix::Zero(n, n);
    }
    const auto l_count = std::min<Eigen::Index>(3, n);
    Matrix init = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < l_count; ++i) {
        init += ctx.dec.u.col(i) * ctx.dec.v.col(i).transpose();
    }
    return init;
}

Matrix apply_T(const Matrix& l, const OperatorContext& ctx, bool drop_projection) {
    if (drop_projection) {
        return svt(gradient_step(l, ctx), ctx.beta * ctx.eta);
    }
    return composed_T(l, ctx);
}

}  // namespace

Solution solve(const Matrix& pi_hat, const SolverParams& params) {
    params.validate();
    OperatorContext ctx = OperatorContext::make(pi_hat, params.beta, params.eta);
    const auto n = ctx.dim();

    Matrix l0 = params.initial_position ? *params.initial_position : default_initial(ctx);
    if (l0.rows() != n || l0.cols() != n) {
        throw ValidationError("solve: initial position has wrong dimensions");
    }

    Solution sol;
    Matrix l = apply_T(l0, ctx, params.drop_projection);  // L^(1)

    for (int k = 1;; ++k) {
        Matrix tl = apply_T(l, ctx, params.drop_projection);
        const double gap = (l - tl).norm();

        IterationRecord rec;
        rec.k = k;
        rec.objective = objective(l, ctx);
        rec.fixed_point_gap = gap;
        rec.spectral_coords = (ctx.dec.u.transpose() * l * ctx.dec.v).diagonal();
        rec.case_labels.reserve(static_cast<size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) {
            const double lam = std::clamp(rec.spectral_coords(i), -1.0, 1.0);
            rec.case_labels.push_back(
                case_classify(lam, ctx.dec.sigma(i), ctx.beta, ctx.eta, params.theta));
        }
        sol.trace.records.push_back(std::move(rec));

        if (gap <= params.tol) {
            sol.trace.status = SolverStatus::converged;
            break;
        }
        if (k >= params.max_iters) {
            sol.trace.status = SolverStatus::max_iters;
            break;
        }
        l = (1.0 - params.theta) * l + params.theta * tl;
    }

    sol.position = l;
    sol.spectral_energies = (ctx.dec.u.transpose() * l * ctx.dec.v).diagonal();
    return sol;
}

SpectralSolution solve_spectral(const Vector& sigmas, const Vector& lambda0,
                                const SolverParams& params) {
    params.validate();
    if (sigmas.size() != lambda0.size()) {
        throw ValidationError("solve_spectral: sigma/lambda0 length mismatch");
    }
    if ((sigmas.array() < 0.0).any()) {
        throw ValidationError("solve_spectral: sigmas must be non-negative");
    }
    if ((lambda0.array().abs() > 1.0).any()) {
        throw ValidationError("solve_spectral: lambda0 must lie in [-1,1]");
    }

    const auto n = sigmas.size();
    SpectralSolution sol;

    // First step is the bare map, mirroring L^(1) = T(L^(0)).
    Vector lam(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lam(i) = scalar_T(lambda0(i), sigmas(i), params.beta, params.eta);
    }

    for (int k = 1;; ++k) {
        Vector gamma(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            gamma(i) = scalar_T(lam(i), sigmas(i), params.beta, params.eta);
        }
        const double gap = (lam - gamma).cwiseAbs().maxCoeff();
        sol.iterates.push_back(lam);

        if (gap <= params.tol) {
            sol.status = SolverStatus::converged;
            break;
        }
        if (k >= params.max_iters) {
            sol.status = SolverStatus::max_iters;
            break;
        }
        lam = (1.0 - params.theta) * lam + params.theta * gamma;
    }

    sol.lambdas = lam;
    return sol;
}

Vector analytic_optimum(const Vector& sigmas, double eta) {
    Vector out(sigmas.size());
    for (Eigen::Index i = 0; i < sigmas.size(); ++i) {
        out(i) = sigmas(i) > eta ? 1.0 : 0.0;
    }
    return out;
}

}  // namespace ltpss
