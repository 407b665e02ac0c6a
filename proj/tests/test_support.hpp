#pragma once

#include <random>

#include "ltpss/linalg.hpp"

namespace ltpss::testing {

inline Matrix random_matrix(std::mt19937& rng, Eigen::Index n, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

inline Vector random_unit_box(std::mt19937& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);
    return v;
}

}  // namespace ltpss::testing
