#pragma once

#include "ltpss/linalg.hpp"

namespace ltpss {

// Fixed data shared by every operator evaluation: the prediction matrix, the
// decomposition of its transpose, the step size beta and the nuclear-norm
// weight eta.
struct OperatorContext {
    Matrix pi_hat;
    SpectralDecomposition dec;  // of pi_hat^T
    double beta;
    double eta;

    static OperatorContext make(Matrix pi_hat, double beta, double eta);

    Eigen::Index dim() const { return pi_hat.rows(); }
};

// L + beta * pi_hat^T.
Matrix gradient_step(const Matrix& l, const OperatorContext& ctx);

// Singular value thresholding: shrink every singular value of a toward zero
// by tau, flooring at zero. The proximal map of tau * nuclear norm.
Matrix svt(const Matrix& a, double tau);

// The non-orthogonal spectral-box projection: with U, V fixed from the
// decomposition of pi_hat^T, form Gamma = U^T A V, keep only its diagonal,
// clip each entry to [-1, 1], and rebuild U diag(...) V^T. The off-diagonal
// of Gamma is discarded; that is the operator the convergence theory is
// stated for, not the Euclidean projection onto the spectral ball.
Matrix project_spectral_box(const Matrix& a, const OperatorContext& ctx);

// project_spectral_box(svt(gradient_step(l), beta*eta)).
Matrix composed_T(const Matrix& l, const OperatorContext& ctx);

// The same composed map restricted to one spectral coordinate:
//   lambda + beta*sigma >= 0  ->  min{max{lambda + beta*(sigma-eta), 0}, 1}
//   otherwise                 ->  min{lambda + beta*(sigma+eta), 0}
double scalar_T(double lambda, double sigma, double beta, double eta);

// Diagnostic classifier for the ten descent cases of one spectral coordinate.
// Returns a label in 1..10. The solver never branches on it.
int case_classify(double lambda, double sigma, double beta, double eta, double theta);

}  // namespace ltpss
