#pragma once

#include <Eigen/Dense>

namespace ltpss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Full SVD of a square matrix with a fixed gauge so that repeated runs (and
// downstream principal-portfolio constructions) are bit-for-bit reproducible:
//   - sigma descending, non-negative;
//   - in each column of u the largest-magnitude entry is non-negative,
//     ties broken by lowest row index; v flips in tandem.
struct SpectralDecomposition {
    Matrix u;
    Vector sigma;
    Matrix v;

    Matrix reconstruct() const { return u * sigma.asDiagonal() * v.transpose(); }
};

struct MatrixNorms {
    double frobenius;
    double nuclear;
    double spectral;
};

SpectralDecomposition svd(const Matrix& a);

// tr(a^T b), the Frobenius inner product.
double trace_inner(const Matrix& a, const Matrix& b);

// All three norms from one decomposition of a.
MatrixNorms norms(const Matrix& a);

void require_square_finite(const Matrix& a, const char* who);

}  // namespace ltpss
