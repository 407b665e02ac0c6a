#pragma once

#include <optional>
#include <vector>

#include "ltpss/operators.hpp"

namespace ltpss {

struct SolverParams {
    double beta = 100.0;
    double eta = 0.001;
    double theta = 0.9999;
    int max_iters = 10000;
    double tol = 1e-8;  // on the fixed-point gap ||L - T(L)||_F
    std::optional<Matrix> initial_position;  // default: first-3-PP position
    // Diagnostic: replace the spectral-box projection by the identity, turning
    // the iteration into a plain proximal-gradient comparator. Iterates are
    // then not constrained to the spectral ball.
    bool drop_projection = false;

    void validate() const;
};

struct IterationRecord {
    int k;
    double objective;
    double fixed_point_gap;
    Vector spectral_coords;   // diag(U^T L^(k) V)
    std::vector<int> case_labels;
};

enum class SolverStatus { converged, max_iters };

struct SolverTrace {
    std::vector<IterationRecord> records;
    SolverStatus status = SolverStatus::max_iters;
};

struct Solution {
    Matrix position;
    SolverTrace trace;
    Vector spectral_energies;  // diag(U^T L* V)
};

// F(L) = -tr(L pi_hat) + eta * ||L||_*.
double objective(const Matrix& l, const OperatorContext& ctx);

// L^(1) := T(L^(0)), then L^(k+1) := (1-theta) L^(k) + theta T(L^(k)) until
// the fixed-point gap drops below tol or max_iters is hit.
Solution solve(const Matrix& pi_hat, const SolverParams& params);

// The same iteration run per spectral coordinate, as an independent
// cross-check of the matrix path. Stops on the max-norm of the
// coordinate-wise gaps.
struct SpectralSolution {
    Vector lambdas;
    std::vector<Vector> iterates;  // lambda^(k) for k = 1, 2, ...
    SolverStatus status = SolverStatus::max_iters;
};

SpectralSolution solve_spectral(const Vector& sigmas, const Vector& lambda0,
                                const SolverParams& params);

// Per-coordinate minimizer of eta*|lambda| - sigma*lambda over [-1, 1]:
// 1 if sigma > eta, else 0 (ties to 0).
Vector analytic_optimum(const Vector& sigmas, double eta);

}  // namespace ltpss
