#include "impstab/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace impstab {

std::vector<std::pair<int, int>> block_structure(const Eigen::MatrixXd& lambda_block) {
    const int d = static_cast<int>(lambda_block.rows());
    if (lambda_block.cols() != d) {
        throw std::invalid_argument("block_structure: matrix must be square");
    }
    std::vector<std::pair<int, int>> blocks;
    int i = 0;
    while (i < d) {
        const bool pair = (i + 1 < d) && lambda_block(i, i + 1) != 0.0;
        if (pair) {
            if (lambda_block(i + 1, i) != -lambda_block(i, i + 1) ||
                lambda_block(i, i) != lambda_block(i + 1, i + 1)) {
                throw std::invalid_argument("block_structure: 2x2 block is not of the form [[s,w],[-w,s]]");
            }
            blocks.emplace_back(i, 2);
            i += 2;
        } else {
            if (i + 1 < d && lambda_block(i + 1, i) != 0.0) {
                throw std::invalid_argument("block_structure: unpaired subdiagonal entry");
            }
            blocks.emplace_back(i, 1);
            i += 1;
        }
    }
    // everything outside the blocks must vanish
    for (const auto& [start, size] : blocks) {
        for (int r = start; r < start + size; ++r) {
            for (int c = 0; c < d; ++c) {
                if (c >= start && c < start + size) continue;
                if (lambda_block(r, c) != 0.0) {
                    throw std::invalid_argument("block_structure: nonzero entry outside block diagonal");
                }
            }
        }
    }
    return blocks;
}

Eigen::MatrixXd block_matrix_exponential(const Eigen::MatrixXd& lambda_block, double t) {
    const auto blocks = block_structure(lambda_block);
    const int d = static_cast<int>(lambda_block.rows());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
    for (const auto& [start, size] : blocks) {
        const double sigma = lambda_block(start, start);
        const double scale = std::exp(sigma * t);
        if (size == 1) {
            out(start, start) = scale;
        } else {
            const double omega = lambda_block(start, start + 1);
            const double c = std::cos(omega * t);
            const double s = std::sin(omega * t);
            out(start, start) = scale * c;
            out(start, start + 1) = scale * s;
            out(start + 1, start) = -scale * s;
            out(start + 1, start + 1) = scale * c;
        }
    }
    return out;
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& m, double tol, const char* what) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= tol * sv(0)) {
        throw std::runtime_error(std::string(what) + ": matrix is singular to tolerance");
    }
    return svd.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

void gauss_legendre(int order, double a, double b, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    nodes.resize(order);
    weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-based initial guess
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double xm = 0.5 * (b + a);
        const double xl = 0.5 * (b - a);
        nodes(i) = xm - xl * x;
        nodes(order - 1 - i) = xm + xl * x;
        const double w = 2.0 * xl / ((1.0 - x * x) * pp * pp);
        weights(i) = w;
        weights(order - 1 - i) = w;
    }
}

}  // namespace impstab
