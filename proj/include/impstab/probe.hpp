#pragma once

#include <Eigen/Core>
#include <vector>

#include "impstab/control_space.hpp"
#include "impstab/linalg.hpp"
#include "impstab/spectrum.hpp"

namespace impstab {

/// Printed when the probe map cannot reach the whole d x d monodromy space.
inline constexpr const char* kDeficientRankMessage =
    "M0 of deficient rank; unconstrained problem might be infeasible with specified control space.";

/// Decomposition M(B) = M0(B) + Z of the reduced one-period map relative to a
/// control basis, with column-major vectorized forms for the optimizer.
struct ProbeData {
    std::vector<Eigen::MatrixXd> m0_blocks;  // M0(basis_i), each d x d
    Eigen::MatrixXd z;                       // exp(Lambda / h), d x d
    Eigen::MatrixXd m0_vectorized;           // d^2 x k
    Eigen::VectorXd z_vectorized;            // d^2
    double h = 0.0;
    int d = 0;
    int k = 0;
};

struct RankDiagnostic {
    int rank = 0;
    bool deficient = false;
};

/// Probe blocks M0(basis_i) = Gamma Psi(0) basis_i Phi(0) Z and the flow
/// matrix Z = exp(Lambda / h).
ProbeData probe_map(const SpectralData& spectral, double h, const ControlSpace& space);

/// Z + sum_i x_i M0(basis_i); exactly linear in x.
Eigen::MatrixXd monodromy_at(const ProbeData& probe, const Eigen::VectorXd& x);

/// Maximum eigenvalue modulus.
double spectral_radius(const Eigen::MatrixXd& m);

/// Numerical rank of the vectorized probe map; deficient when below d^2.
RankDiagnostic rank_diagnostic(const ProbeData& probe);

}  // namespace impstab
