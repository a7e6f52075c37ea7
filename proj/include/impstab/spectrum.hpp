#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "impstab/dde.hpp"

namespace impstab {

struct RefinementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DefectiveSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyWindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One retained spectral mode: a real eigenvalue or a conjugate pair
/// represented by its member with positive imaginary part.
struct SpectralMode {
    bool is_pair = false;
    std::complex<double> lambda;    // refined eigenvalue
    Eigen::VectorXcd right;         // right null vector of the characteristic matrix
    Eigen::RowVectorXcd left;       // left null vector, scaled so left * right = 1
};

struct SpectrumResult {
    std::vector<std::complex<double>> eigs_all;   // raw discretized spectrum, ascending real part
    std::vector<std::complex<double>> retained;   // refined windowed eigenvalues, pairs kept together
    std::vector<SpectralMode> modes;              // retained modes, ascending real part
    EigenWindow window;
    int count = 0;                                // retained count, counting pair multiplicity

    std::string count_message() const;
};

/// Real eigendata of the windowed spectrum: Lambda has 1x1 blocks [s] for real
/// eigenvalues and 2x2 blocks [[s,w],[-w,s]] for pairs s +/- iw; phi0/psi0
/// carry the corresponding right/left eigenvector data and gamma inverts the
/// adjoint pairing.
struct SpectralData {
    Eigen::MatrixXd lambda_block;  // d x d
    Eigen::MatrixXd phi0;          // n x d
    Eigen::MatrixXd psi0;          // d x n
    Eigen::MatrixXd gamma;         // d x d
    std::vector<std::complex<double>> eigs_all;
    std::vector<std::complex<double>> retained;
    std::vector<SpectralMode> modes;
    int d = 0;

    int n() const { return static_cast<int>(phi0.rows()); }
};

/// Characteristic matrix Delta(xi) = I*xi - A0 - A1*exp(-xi*tau).
Eigen::MatrixXcd characteristic_matrix(const DdeSystem& sys, std::complex<double> xi);

/// Pseudospectral approximation of the solution-operator generator on N+1
/// Chebyshev nodes scaled to [-tau, 0]; node index 0 corresponds to theta = 0,
/// whose block row carries the boundary condition [A0, 0, ..., 0, A1].
Eigen::MatrixXd discretize_generator(const DdeSystem& sys, int n_cheb);

/// Eigenvalues of the discretized generator plus the refined windowed subset.
SpectrumResult compute_spectrum(const DdeSystem& sys, int n_cheb, const EigenWindow& window);

/// Full eigendata from an already-computed spectrum.
SpectralData eigendata(const DdeSystem& sys, const SpectrumResult& spectrum);
SpectralData eigendata(const DdeSystem& sys, int n_cheb, const EigenWindow& window);

/// Adjoint pairing <Psi, Phi> = Psi(0)Phi(0) - integral_0^tau Psi(s) A1 Phi(s - tau) ds,
/// evaluated with fixed-order Gauss-Legendre quadrature.
Eigen::MatrixXd bilinear_form(const DdeSystem& sys, const SpectralData& spectral);

}  // namespace impstab
