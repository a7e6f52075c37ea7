#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <random>

namespace impstab {

/// Seeded random source with platform-independent output: mersenne twister
/// bits are mapped to doubles directly instead of going through the
/// implementation-defined standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    Eigen::VectorXd uniform_vector(int size, double lo, double hi) {
        Eigen::VectorXd v(size);
        for (int i = 0; i < size; ++i) v(i) = uniform(lo, hi);
        return v;
    }

    Eigen::VectorXd normal_vector(int size) {
        Eigen::VectorXd v(size);
        for (int i = 0; i < size; ++i) v(i) = normal();
        return v;
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace impstab
