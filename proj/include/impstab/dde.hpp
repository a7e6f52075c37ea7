#pragma once

#include <Eigen/Core>
#include <limits>
#include <stdexcept>

namespace impstab {

/// Linear delay differential equation x'(t) = A0 x(t) + A1 x(t - tau).
struct DdeSystem {
    Eigen::MatrixXd a0;
    Eigen::MatrixXd a1;
    double tau = 0.0;

    DdeSystem(Eigen::MatrixXd a0_, Eigen::MatrixXd a1_, double tau_)
        : a0(std::move(a0_)), a1(std::move(a1_)), tau(tau_) {
        if (a0.rows() != a0.cols() || a1.rows() != a1.cols() || a0.rows() != a1.rows()) {
            throw std::invalid_argument("DdeSystem: a0 and a1 must be square with equal dimension");
        }
        if (a0.rows() < 1) {
            throw std::invalid_argument("DdeSystem: state dimension must be positive");
        }
        if (!(tau > 0.0)) {
            throw std::invalid_argument("DdeSystem: delay tau must be positive");
        }
        if (!a0.allFinite() || !a1.allFinite()) {
            throw std::invalid_argument("DdeSystem: coefficient matrices must be finite");
        }
    }

    int n() const { return static_cast<int>(a0.rows()); }
};

/// Half-open-at-infinity retention window on eigenvalue real parts.
struct EigenWindow {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    EigenWindow() = default;
    EigenWindow(double lower_, double upper_) : lower(lower_), upper(upper_) {
        if (!(lower < upper)) {
            throw std::invalid_argument("EigenWindow: lower bound must be below upper bound");
        }
    }

    bool contains(double re) const { return re >= lower && re <= upper; }
    bool upper_is_infinite() const { return upper == std::numeric_limits<double>::infinity(); }
};

}  // namespace impstab
