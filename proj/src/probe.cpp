#include "impstab/probe.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace impstab {

ProbeData probe_map(const SpectralData& spectral, double h, const ControlSpace& space) {
    if (!(h > 0.0)) throw std::invalid_argument("probe_map: impulse frequency h must be positive");
    if (space.k() == 0 || space.n() != spectral.n()) {
        throw std::invalid_argument("probe_map: control space dimension does not match the system");
    }
    ProbeData probe;
    probe.h = h;
    probe.d = spectral.d;
    probe.k = space.k();
    probe.z = block_matrix_exponential(spectral.lambda_block, 1.0 / h);

    const int d = probe.d;
    probe.m0_vectorized.resize(d * d, probe.k);
    const Eigen::MatrixXd lead = spectral.gamma * spectral.psi0;
    const Eigen::MatrixXd tail = spectral.phi0 * probe.z;
    for (int i = 0; i < probe.k; ++i) {
        Eigen::MatrixXd block = lead * space.basis[i] * tail;
        probe.m0_vectorized.col(i) = Eigen::Map<const Eigen::VectorXd>(block.data(), d * d);
        probe.m0_blocks.push_back(std::move(block));
    }
    probe.z_vectorized = Eigen::Map<const Eigen::VectorXd>(probe.z.data(), d * d);
    return probe;
}

Eigen::MatrixXd monodromy_at(const ProbeData& probe, const Eigen::VectorXd& x) {
    if (x.size() != probe.k) {
        throw std::invalid_argument("monodromy_at: coordinate length does not match the probe basis");
    }
    Eigen::MatrixXd m = probe.z;
    for (int i = 0; i < probe.k; ++i) m += x(i) * probe.m0_blocks[i];
    return m;
}

double spectral_radius(const Eigen::MatrixXd& m) {
    if (!m.allFinite()) throw std::invalid_argument("spectral_radius: matrix must be finite");
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("spectral_radius: eigensolver did not converge");
    }
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

RankDiagnostic rank_diagnostic(const ProbeData& probe) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(probe.m0_vectorized);
    const auto& sv = svd.singularValues();
    RankDiagnostic diag;
    if (sv.size() > 0 && sv(0) > 0.0) {
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) > 1e-10 * sv(0)) ++diag.rank;
        }
    }
    diag.deficient = diag.rank < probe.d * probe.d;
    return diag;
}

}  // namespace impstab
