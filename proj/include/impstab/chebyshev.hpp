#pragma once

#include <Eigen/Core>

namespace impstab {

struct ChebyshevDiff {
    Eigen::VectorXd nodes;  // Chebyshev-Lobatto points cos(j*pi/N), descending from 1
    Eigen::MatrixXd d;      // (N+1)x(N+1) differentiation matrix on those nodes
};

/// Differentiation matrix on the N+1 Chebyshev-Lobatto points of [-1, 1].
/// Exact for polynomials of degree <= N. Requires N >= 1.
ChebyshevDiff chebyshev_diff(int n);

}  // namespace impstab
