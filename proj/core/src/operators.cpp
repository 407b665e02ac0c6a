#include "ltpss/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

OperatorContext OperatorContext::make(Matrix pi_hat, double beta, double eta) {
    require_square_finite(pi_hat, "OperatorContext");
    if (beta <= 0.0) {
        throw ValidationError("OperatorContext: beta must be positive");
    }
    if (eta < 0.0) {
        throw ValidationError("OperatorContext: eta must be non-negative");
    }
    OperatorContext ctx;
    ctx.dec = svd(pi_hat.transpose());
    ctx.pi_hat = std::move(pi_hat);
    ctx.beta = beta;
    ctx.eta = eta;
    return ctx;
}

Matrix gradient_step(const Matrix& l, const OperatorContext& ctx) {
    if (l.rows() != ctx.dim() || l.cols() != ctx.dim()) {
        throw ValidationError("gradient_step: dimension mismatch");
    }
    return l + ctx.beta * ctx.pi_hat.transpose();
}

Matrix svt(const Matrix& a, double tau) {
    if (tau < 0.0) {
        throw ValidationError("svt: tau must be non-negative");
    }
    SpectralDecomposition dec = svd(a);
    Vector shrunk = (dec.sigma.array() - tau).max(0.0);
    return dec.u * shrunk.asDiagonal() * dec.v.transpose();
}

Matrix project_spectral_box(const Matrix& a, const OperatorContext& ctx) {
    if (a.rows() != ctx.dim() || a.cols() != ctx.dim()) {
        throw ValidationError("project_spectral_box: dimension mismatch");
    }
    Vector gamma = (ctx.dec.u.transpose() * a * ctx.dec.v).diagonal();
    Vector clipped = gamma.array().min(1.0).max(-1.0);
    return ctx.dec.u * clipped.asDiagonal() * ctx.dec.v.transpose();
}

Matrix composed_T(const Matrix& l, const OperatorContext& ctx) {
    return project_spectral_box(svt(gradient_step(l, ctx), ctx.beta * ctx.eta), ctx);
}

double scalar_T(double lambda, double sigma, double beta, double eta) {
    if (std::abs(lambda) > 1.0) {
        throw ValidationError("scalar_T: |lambda| must be <= 1, got " + std::to_string(lambda));
    }
    if (lambda + beta * sigma >= 0.0) {
        return std::min(std::max(lambda + beta * (sigma - eta), 0.0), 1.0);
    }
    return std::min(lambda + beta * (sigma + eta), 0.0);
}

int case_classify(double lambda, double sigma, double beta, double eta, double theta) {
    if (std::abs(lambda) > 1.0) {
        throw ValidationError("case_classify: |lambda| must be <= 1");
    }
    if (theta <= 0.0 || theta >= 1.0) {
        throw ValidationError("case_classify: theta must be in (0,1)");
    }
    const double gamma = scalar_T(lambda, sigma, beta, eta);
    const double next = (1.0 - theta) * lambda + theta * gamma;
    const double drift = lambda + beta * sigma;

    if (drift >= 0.0) {
        if (sigma >= eta) {
            if (lambda >= 0.0) return 1;
            return next >= 0.0 ? 2 : 3;
        }
        // sigma < eta
        if (lambda + beta * (sigma - eta) >= 0.0) {
            return next >= 0.0 ? 4 : 5;
        }
        // 0 <= lambda + beta*sigma < beta*eta
        return lambda >= 0.0 ? 6 : 7;
    }
    if (lambda + beta * (sigma + eta) >= 0.0) return 8;
    return next >= 0.0 ? 9 : 10;
}

}  // namespace ltpss
