#include "impstab/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace impstab {

ChebyshevDiff chebyshev_diff(int n) {
    if (n < 1) throw std::invalid_argument("chebyshev_diff: N must be at least 1");
    const int m = n + 1;
    ChebyshevDiff out;
    out.nodes.resize(m);
    for (int j = 0; j < m; ++j) out.nodes(j) = std::cos(M_PI * j / n);

    Eigen::VectorXd c(m);
    for (int i = 0; i < m; ++i) {
        c(i) = (i == 0 || i == n) ? 2.0 : 1.0;
        if (i % 2 == 1) c(i) = -c(i);
    }
    out.d.resize(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            out.d(i, j) = (c(i) / c(j)) / (out.nodes(i) - out.nodes(j));
        }
    }
    // negative-sum trick keeps row sums exactly zero
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) {
            if (j != i) s += out.d(i, j);
        }
        out.d(i, i) = -s;
    }
    return out;
}

}  // namespace impstab
