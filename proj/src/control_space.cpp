#include "impstab/control_space.hpp"

#include <Eigen/Dense>

namespace impstab {

namespace {

void check_independent(const std::vector<Eigen::MatrixXd>& mats) {
    const int k = static_cast<int>(mats.size());
    const int n = static_cast<int>(mats.front().rows());
    Eigen::MatrixXd stacked(n * n, k);
    for (int i = 0; i < k; ++i) {
        stacked.col(i) = Eigen::Map<const Eigen::VectorXd>(mats[i].data(), n * n);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    }
    if (rank < k) {
        throw InvalidBasisError("control basis matrices are linearly dependent");
    }
}

}  // namespace

Eigen::MatrixXd ControlSpace::assemble(const Eigen::VectorXd& coords) const {
    if (coords.size() != k()) {
        throw std::invalid_argument("ControlSpace::assemble: coordinate length does not match basis size");
    }
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n(), n());
    for (int i = 0; i < k(); ++i) b += coords(i) * basis[i];
    return b;
}

ControlSpace explicit_basis(const std::vector<Eigen::MatrixXd>& mats) {
    if (mats.empty()) throw InvalidBasisError("explicit_basis: basis list is empty");
    const int n = static_cast<int>(mats.front().rows());
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n) {
            throw InvalidBasisError("explicit_basis: basis matrices must be square with equal dimension");
        }
        if (!m.allFinite()) throw InvalidBasisError("explicit_basis: basis matrices must be finite");
    }
    check_independent(mats);
    return ControlSpace{mats, {}};
}

ControlSpace diagonal_basis(int n) {
    if (n < 1) throw std::invalid_argument("diagonal_basis: dimension must be positive");
    ControlSpace space;
    space.basis.reserve(n);
    for (int j = 0; j < n; ++j) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
        b(j, j) = 1.0;
        space.basis.push_back(std::move(b));
    }
    return space;
}

ControlSpace reassignment_basis(int n) {
    if (n < 2) throw std::invalid_argument("reassignment_basis: dimension must be at least 2");
    ControlSpace space;
    space.basis.reserve(static_cast<size_t>(n) * (n - 1));
    // source column blocks: element (i, j) moves work out of node i into the
    // node i+j steps below, wrapping around (indices here are 1-based)
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
            b(i - 1, i - 1) = -1.0;
            const int row = (i + j <= n) ? (i + j) : ((i + j) % n);
            b(row - 1, i - 1) = 1.0;
            space.basis.push_back(std::move(b));
        }
    }
    return space;
}

ConstraintFn box_and_columnsum_constraint(int n) {
    if (n < 2) throw std::invalid_argument("box_and_columnsum_constraint: dimension must be at least 2");
    const int k = n * (n - 1);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, k);
    for (int i = 0; i < n; ++i) {
        c.block(i, i * (n - 1), 1, n - 1).setOnes();
    }
    return [c, k, n](const Eigen::VectorXd& x) {
        if (x.size() != k) {
            throw std::invalid_argument("box_and_columnsum_constraint: coordinate length mismatch");
        }
        Eigen::VectorXd out(k + n);
        out.head(k) = -x;
        out.tail(n) = c * x - Eigen::VectorXd::Ones(n);
        return out;
    };
}

}  // namespace impstab
