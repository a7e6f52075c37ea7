#include "impstab/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "impstab/chebyshev.hpp"
#include "impstab/linalg.hpp"

namespace impstab {

namespace {

constexpr double kPairTol = 1e-6;         // |Im| below this (scaled) is treated as real
constexpr double kDefectTol = 1e-8;       // minimum separation of retained eigenvalues
constexpr double kNewtonTol = 1e-12;      // bordered-system residual target
constexpr int kNewtonMaxIter = 50;
constexpr int kQuadratureOrder = 32;

bool nearly_real(std::complex<double> z) {
    return std::abs(z.imag()) <= kPairTol * (1.0 + std::abs(z));
}

/// Rotate and scale a complex vector to unit norm with its first significant
/// component real and positive.
Eigen::VectorXcd normalize_phase(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = v / v.norm();
    int lead = 0;
    const double thresh = 1e-12 * out.cwiseAbs().maxCoeff();
    for (int i = 0; i < out.size(); ++i) {
        if (std::abs(out(i)) > thresh) {
            lead = i;
            break;
        }
    }
    const std::complex<double> phase = out(lead) / std::abs(out(lead));
    return out / phase;
}

Eigen::MatrixXcd char_matrix_derivative(const DdeSystem& sys, std::complex<double> xi) {
    const int n = sys.n();
    return Eigen::MatrixXcd::Identity(n, n) +
           sys.tau * std::exp(-xi * sys.tau) * sys.a1.cast<std::complex<double>>();
}

/// Newton iteration on the bordered system {Delta(lambda) v = 0, c^T v = 1},
/// seeded from a discretized eigenpair.
void refine_eigenpair(const DdeSystem& sys, std::complex<double>& lambda, Eigen::VectorXcd& v) {
    const int n = sys.n();
    v = normalize_phase(v);
    const Eigen::VectorXcd c = v.conjugate() / v.squaredNorm();

    for (int it = 0; it < kNewtonMaxIter; ++it) {
        const Eigen::MatrixXcd delta = characteristic_matrix(sys, lambda);
        const Eigen::VectorXcd res_top = delta * v;
        const std::complex<double> res_bot = c.transpose() * v - std::complex<double>(1.0);
        const double scale = 1.0 + std::abs(lambda);
        if (res_top.norm() <= kNewtonTol * scale && std::abs(res_bot) <= kNewtonTol) {
            v = normalize_phase(v);
            return;
        }
        Eigen::MatrixXcd jac(n + 1, n + 1);
        jac.topLeftCorner(n, n) = delta;
        jac.topRightCorner(n, 1) = char_matrix_derivative(sys, lambda) * v;
        jac.bottomLeftCorner(1, n) = c.transpose();
        jac(n, n) = 0.0;
        Eigen::VectorXcd rhs(n + 1);
        rhs.head(n) = -res_top;
        rhs(n) = -res_bot;
        const Eigen::VectorXcd step = jac.partialPivLu().solve(rhs);
        v += step.head(n);
        lambda += step(n);
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "eigenvalue refinement did not converge near %.6g%+.6gi",
                  lambda.real(), lambda.imag());
    throw RefinementError(buf);
}

/// Left null vector of Delta(lambda), scaled so that left * right = 1.
Eigen::RowVectorXcd left_null_vector(const DdeSystem& sys, std::complex<double> lambda,
                                     const Eigen::VectorXcd& right) {
    const Eigen::MatrixXcd delta = characteristic_matrix(sys, lambda);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(delta, Eigen::ComputeFullU);
    // u^T Delta = 0  <=>  Delta^H conj(u) = 0, so u is the conjugate of the
    // left singular vector belonging to the smallest singular value.
    Eigen::RowVectorXcd u = svd.matrixU().col(sys.n() - 1).conjugate().transpose();
    const std::complex<double> pairing = u * right;
    if (std::abs(pairing) < 1e-10) {
        throw DefectiveSpectrumError("left and right eigenvectors are numerically orthogonal");
    }
    return u / pairing;
}

}  // namespace

Eigen::MatrixXcd characteristic_matrix(const DdeSystem& sys, std::complex<double> xi) {
    const int n = sys.n();
    return xi * Eigen::MatrixXcd::Identity(n, n) - sys.a0.cast<std::complex<double>>() -
           std::exp(-xi * sys.tau) * sys.a1.cast<std::complex<double>>();
}

Eigen::MatrixXd discretize_generator(const DdeSystem& sys, int n_cheb) {
    if (n_cheb < 2) throw std::invalid_argument("discretize_generator: N must be at least 2");
    const int n = sys.n();
    const auto cheb = chebyshev_diff(n_cheb);
    const Eigen::MatrixXd d_theta = (2.0 / sys.tau) * cheb.d;

    const int dim = n * (n_cheb + 1);
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i <= n_cheb; ++i) {
        for (int j = 0; j <= n_cheb; ++j) {
            gen.block(i * n, j * n, n, n) = d_theta(i, j) * Eigen::MatrixXd::Identity(n, n);
        }
    }
    // boundary condition at the theta = 0 node replaces the first block row
    gen.block(0, 0, n, dim).setZero();
    gen.block(0, 0, n, n) = sys.a0;
    gen.block(0, n_cheb * n, n, n) = sys.a1;
    return gen;
}

SpectrumResult compute_spectrum(const DdeSystem& sys, int n_cheb, const EigenWindow& window) {
    const int n = sys.n();
    const Eigen::MatrixXd gen = discretize_generator(sys, n_cheb);
    Eigen::EigenSolver<Eigen::MatrixXd> es(gen);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("compute_spectrum: eigensolver failed on the discretized generator");
    }

    SpectrumResult out;
    out.window = window;
    const auto& vals = es.eigenvalues();
    out.eigs_all.assign(vals.data(), vals.data() + vals.size());
    std::sort(out.eigs_all.begin(), out.eigs_all.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // collect raw modes: real eigenvalues and one representative per conjugate pair
    struct RawMode {
        bool is_pair;
        std::complex<double> lambda;
        Eigen::VectorXcd seed;
    };
    std::vector<RawMode> raw;
    for (int i = 0; i < vals.size(); ++i) {
        const std::complex<double> lam = vals(i);
        if (!nearly_real(lam) && lam.imag() < 0.0) continue;  // the +iw member represents a pair
        if (!window.contains(lam.real())) continue;
        // the head block of the discretized eigenvector samples theta = 0
        Eigen::VectorXcd seed = es.eigenvectors().col(i).head(n);
        raw.push_back({!nearly_real(lam), lam, std::move(seed)});
    }
    std::sort(raw.begin(), raw.end(), [](const RawMode& a, const RawMode& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        return a.lambda.imag() < b.lambda.imag();
    });

    for (auto& rm : raw) {
        SpectralMode mode;
        mode.is_pair = rm.is_pair;
        std::complex<double> lambda = rm.is_pair ? rm.lambda : std::complex<double>(rm.lambda.real(), 0.0);
        Eigen::VectorXcd v = rm.seed;
        refine_eigenpair(sys, lambda, v);
        if (!rm.is_pair) lambda = std::complex<double>(lambda.real(), 0.0);
        if (rm.is_pair && lambda.imag() < 0.0) lambda = std::conj(lambda), v = v.conjugate();
        mode.lambda = lambda;
        mode.right = normalize_phase(v);
        out.modes.push_back(std::move(mode));
    }

    // defectiveness guard on the refined set (pairs contribute both members)
    std::vector<std::complex<double>> expanded;
    for (const auto& m : out.modes) {
        expanded.push_back(m.lambda);
        if (m.is_pair) expanded.push_back(std::conj(m.lambda));
    }
    for (size_t i = 0; i < expanded.size(); ++i) {
        for (size_t j = i + 1; j < expanded.size(); ++j) {
            if (std::abs(expanded[i] - expanded[j]) < kDefectTol) {
                throw DefectiveSpectrumError(
                    "two retained eigenvalues coincide to tolerance; the spectrum may be defective");
            }
        }
    }

    std::sort(expanded.begin(), expanded.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.retained = std::move(expanded);
    out.count = static_cast<int>(out.retained.size());
    return out;
}

std::string SpectrumResult::count_message() const {
    char buf[160];
    if (window.upper_is_infinite()) {
        std::snprintf(buf, sizeof(buf),
                      "Found %d eigenvalues with real part at least %f for the input DDE, "
                      "counting multiplicity.",
                      count, window.lower);
    } else {
        std::snprintf(buf, sizeof(buf),
                      "Found %d eigenvalues with real part in the interval [%f,%f] for the "
                      "input DDE, counting multiplicity.",
                      count, window.lower, window.upper);
    }
    return buf;
}

SpectralData eigendata(const DdeSystem& sys, const SpectrumResult& spectrum) {
    if (spectrum.modes.empty()) {
        throw EmptyWindowError("eigendata: no eigenvalues retained in the window");
    }
    const int n = sys.n();
    int d = 0;
    for (const auto& m : spectrum.modes) d += m.is_pair ? 2 : 1;

    SpectralData data;
    data.d = d;
    data.eigs_all = spectrum.eigs_all;
    data.retained = spectrum.retained;
    data.modes = spectrum.modes;
    data.lambda_block = Eigen::MatrixXd::Zero(d, d);
    data.phi0 = Eigen::MatrixXd::Zero(n, d);
    data.psi0 = Eigen::MatrixXd::Zero(d, n);

    int col = 0;
    for (auto& mode : data.modes) {
        mode.left = left_null_vector(sys, mode.lambda, mode.right);
        if (!mode.is_pair) {
            data.lambda_block(col, col) = mode.lambda.real();
            data.phi0.col(col) = mode.right.real();
            data.psi0.row(col) = mode.left.real();
            col += 1;
        } else {
            const double sigma = mode.lambda.real();
            const double omega = mode.lambda.imag();
            data.lambda_block(col, col) = sigma;
            data.lambda_block(col, col + 1) = omega;
            data.lambda_block(col + 1, col) = -omega;
            data.lambda_block(col + 1, col + 1) = sigma;
            data.phi0.col(col) = mode.right.real();
            data.phi0.col(col + 1) = mode.right.imag();
            // rows (Re u, -Im u) of the left vector for sigma + i*omega, so
            // that exp(-Lambda s) Psi(0) follows the adjoint eigenfunctions
            data.psi0.row(col) = mode.left.real();
            data.psi0.row(col + 1) = -mode.left.imag();
            col += 2;
        }
    }

    const Eigen::MatrixXd pairing = bilinear_form(sys, data);
    data.gamma = checked_inverse(pairing, 1e-12, "eigendata normalization");
    return data;
}

SpectralData eigendata(const DdeSystem& sys, int n_cheb, const EigenWindow& window) {
    return eigendata(sys, compute_spectrum(sys, n_cheb, window));
}

Eigen::MatrixXd bilinear_form(const DdeSystem& sys, const SpectralData& spectral) {
    Eigen::MatrixXd pairing = spectral.psi0 * spectral.phi0;
    if (sys.a1.isZero(0.0)) return pairing;

    Eigen::VectorXd nodes, weights;
    gauss_legendre(kQuadratureOrder, 0.0, sys.tau, nodes, weights);
    for (int q = 0; q < nodes.size(); ++q) {
        const double s = nodes(q);
        const Eigen::MatrixXd psi_s = block_matrix_exponential(spectral.lambda_block, -s) * spectral.psi0;
        const Eigen::MatrixXd phi_s =
            spectral.phi0 * block_matrix_exponential(spectral.lambda_block, s - sys.tau);
        pairing -= weights(q) * (psi_s * sys.a1 * phi_s);
    }
    return pairing;
}

}  // namespace impstab
