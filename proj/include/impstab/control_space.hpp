#pragma once

#include <Eigen/Core>
#include <functional>
#include <stdexcept>
#include <vector>

namespace impstab {

struct InvalidBasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Coordinate-space constraint: feasible iff every component of c(x) is <= 0.
using ConstraintFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Ordered basis of n x n matrices spanning the admissible control subspace,
/// with an optional convex constraint expressed in basis coordinates.
struct ControlSpace {
    std::vector<Eigen::MatrixXd> basis;
    ConstraintFn constraint;  // empty when unconstrained

    int k() const { return static_cast<int>(basis.size()); }
    int n() const { return basis.empty() ? 0 : static_cast<int>(basis.front().rows()); }

    /// B = sum_i coords(i) * basis_i.
    Eigen::MatrixXd assemble(const Eigen::VectorXd& coords) const;
};

/// Control space from explicitly listed basis matrices. Throws
/// InvalidBasisError when the list is empty, ragged, or linearly dependent.
ControlSpace explicit_basis(const std::vector<Eigen::MatrixXd>& mats);

/// The n diagonal unit matrices e_j e_j^T.
ControlSpace diagonal_basis(int n);

/// The N(N-1) reassignment matrices B(i,j), i != j, with -1 on the jth
/// diagonal entry and +1 at (i, j); ordered by source column blocks with the
/// wrapped row index. Every column of every element sums to zero.
ControlSpace reassignment_basis(int n);

/// c(x) = [-x ; C x - 1] for the reassignment coordinates: componentwise
/// x >= 0 and each source node's outflow at most 1.
ConstraintFn box_and_columnsum_constraint(int n);

}  // namespace impstab
