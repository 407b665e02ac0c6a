#include "ltpss/linalg.hpp"

#include <cmath>
#include <string>

#include "ltpss/errors.hpp"

namespace ltpss {

void require_square_finite(const Matrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw ValidationError(std::string(who) + ": matrix must be square, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (!a.allFinite()) {
        throw NumericalError(std::string(who) + ": matrix has non-finite entries");
    }
}

SpectralDecomposition svd(const Matrix& a) {
    require_square_finite(a, "svd");

    Eigen::JacobiSVD<Matrix> jsvd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SpectralDecomposition dec;
    dec.u = jsvd.matrixU();
    dec.sigma = jsvd.singularValues();
    dec.v = jsvd.matrixV();

    // Gauge fix: largest-magnitude entry of each left singular vector
    // non-negative, lowest index on ties.
    const auto n = dec.u.rows();
    for (Eigen::Index j = 0; j < dec.u.cols(); ++j) {
        Eigen::Index pivot = 0;
        double best = std::abs(dec.u(0, j));
        for (Eigen::Index i = 1; i < n; ++i) {
            const double m = std::abs(dec.u(i, j));
            if (m > best) {
                best = m;
                pivot = i;
            }
        }
        if (dec.u(pivot, j) < 0.0) {
            dec.u.col(j) = -dec.u.col(j);
            dec.v.col(j) = -dec.v.col(j);
        }
    }
    return dec;
}

double trace_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("trace_inner: dimension mismatch");
    }
    return a.cwiseProduct(b).sum();
}

MatrixNorms norms(const Matrix& a) {
    const SpectralDecomposition dec = svd(a);
    MatrixNorms out;
    out.frobenius = std::sqrt(dec.sigma.squaredNorm());
    out.nuclear = dec.sigma.sum();
    out.spectral = dec.sigma.size() > 0 ? dec.sigma(0) : 0.0;
    return out;
}

}  // namespace ltpss
