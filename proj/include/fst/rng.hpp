#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace fst {

/// Seeded random source with distributions implemented on top of the
/// raw engine output, so sequences are identical across platforms
/// (std::normal_distribution is implementation-defined; this is not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    std::complex<double> cgaussian() { return {gaussian(), gaussian()}; }

    Eigen::VectorXcd cvector(int n) {
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i) v[i] = cgaussian();
        return v;
    }

    Eigen::MatrixXcd cmatrix(int rows, int cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = cgaussian();
        return m;
    }

    /// Haar-ish random unitary via QR of a complex gaussian matrix.
    Eigen::MatrixXcd cunitary(int n) {
        const Eigen::MatrixXcd m = cmatrix(n, n);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
        Eigen::MatrixXcd q = qr.householderQ();
        const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int i = 0; i < n; ++i) {
            const std::complex<double> d = r(i, i);
            if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
        }
        return q;
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace fst
