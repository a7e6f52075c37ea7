#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

namespace impstab {

/// Closed-form exponential exp(t * L) for a realified block-diagonal matrix L
/// whose blocks are either [s] or [[s, w], [-w, s]] with w != 0.
/// Throws std::invalid_argument if L is not in that form.
Eigen::MatrixXd block_matrix_exponential(const Eigen::MatrixXd& lambda_block, double t);

/// Splits a realified block-diagonal matrix into its list of starting indices
/// and block sizes (1 or 2). Throws std::invalid_argument on unrecognized structure.
std::vector<std::pair<int, int>> block_structure(const Eigen::MatrixXd& lambda_block);

/// Inverse with a singularity guard: throws std::runtime_error when the
/// smallest singular value is below tol times the largest.
Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& m, double tol, const char* what);

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int order, double a, double b, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace impstab
