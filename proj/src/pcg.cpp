#include "pcgmub/pcg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pcgmub {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MaskSpec::MaskSpec(int dim_, double period_, double origin_)
    : dim(dim_), period(period_), origin(origin_) {
    if (dim < 2) {
        throw Error("MaskSpec: dimensionality d must be at least 2");
    }
    if (!(period > 0.0)) {
        throw Error("MaskSpec: period must be positive");
    }
}

int bin_index(const MaskSpec& mask, double z) {
    double r = std::fmod(z - mask.origin, mask.period);
    if (r < 0.0) r += mask.period;
    // floor(r/s) with clamping keeps the d bins an exact partition even when
    // s * d differs from T in the last ulp.
    const int idx = static_cast<int>(std::floor(r / mask.bin_width()));
    return std::clamp(idx, 0, mask.dim - 1);
}

int mask_value(const MaskSpec& mask, int k, double z) {
    if (k < 0 || k >= mask.dim) {
        throw IndexOutOfRange("mask_value: bin index outside [0, d)");
    }
    return bin_index(mask, z) == k ? 1 : 0;
}

Complex fourier_coefficient(int n, int dim) {
    if (dim < 2) {
        throw Error("fourier_coefficient: d must be at least 2");
    }
    const int r = ((n % dim) + dim) % dim;
    if (r == 0) {
        return n == 0 ? Complex(1.0 / dim, 0.0) : Complex(0.0, 0.0);
    }
    const Complex num = 1.0 - std::exp(Complex(0.0, -kTwoPi * r / dim));
    return num / (Complex(0.0, kTwoPi) * static_cast<double>(n));
}

SeriesTruncation::SeriesTruncation(int n_max_) : n_max(n_max_) {
    if (n_max < 0) {
        throw Error("SeriesTruncation: cutoff must be nonnegative");
    }
}

SeriesTruncation SeriesTruncation::for_tail(int dim, const GridSpec& grid,
                                            double tau, double tail_bound) {
    const double span = (grid.n_points - 1) * grid.spacing();
    const int n_limit =
        std::abs(tau) > 0.0
            ? static_cast<int>(std::floor(span / std::abs(tau)))
            : dim;
    double tail = 0.0;
    int cutoff = n_limit;
    for (int n = n_limit; n > dim; --n) {
        tail += 2.0 * std::abs(fourier_coefficient(n, dim));
        if (tail >= tail_bound) break;
        cutoff = n - 1;
    }
    return SeriesTruncation(std::max(cutoff, dim));
}

WaveFunction prepare_masked_state(const WaveFunction& psi,
                                  const PcgMeasurement& meas, int k) {
    if (k < 0 || k >= meas.mask.dim) {
        throw IndexOutOfRange("prepare_masked_state: bin index outside [0, d)");
    }
    const WaveFunction rotated = apply_frft(psi, meas.direction);
    const GridSpec& g = rotated.grid();

    Eigen::VectorXcd masked = rotated.amplitudes();
    for (int j = 0; j < g.n_points; ++j) {
        if (bin_index(meas.mask, g.coord(j)) != k) {
            masked(j) = Complex(0.0, 0.0);
        }
    }
    const double n = std::sqrt(masked.squaredNorm() * g.spacing());
    if (!(n > 1e-12)) {
        throw EmptyProjection("prepare_masked_state: mask annihilates the state");
    }
    masked /= n;

    const WaveFunction back =
        apply_frft(WaveFunction::from_samples(g, std::move(masked)), -meas.direction);
    return WaveFunction::normalized(back.grid(), back.amplitudes());
}

std::vector<double> pcg_probabilities(const WaveFunction& psi,
                                      const PcgMeasurement& meas) {
    const WaveFunction rotated = apply_frft(psi, meas.direction);
    const GridSpec& g = rotated.grid();
    const double h = g.spacing();

    std::vector<double> p(meas.mask.dim, 0.0);
    for (int j = 0; j < g.n_points; ++j) {
        p[bin_index(meas.mask, g.coord(j))] += std::norm(rotated.amplitudes()(j)) * h;
    }
    for (double& v : p) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return p;
}

Eigen::MatrixXcd omega_matrix_direct(const PcgMeasurement& meas, int k,
                                     const GridSpec& grid) {
    if (k < 0 || k >= meas.mask.dim) {
        throw IndexOutOfRange("omega_matrix_direct: bin index outside [0, d)");
    }
    const int n = grid.n_points;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        if (bin_index(meas.mask, grid.coord(j)) == k) {
            out(j, j) = grid.spacing();
        }
    }
    return out;
}

Eigen::MatrixXcd omega_matrix_in_frame(const PcgMeasurement& meas, int k,
                                       RotationAngle frame, const GridSpec& grid) {
    const RotationAngle to_mask_frame = meas.direction - frame;
    if (to_mask_frame.is_degenerate()) {
        Eigen::MatrixXcd diag = omega_matrix_direct(meas, k, grid);
        if (to_mask_frame.cos() > 0.0) {
            return diag;
        }
        // Frames differ by pi: conjugation by the reflection permutation.
        const int n = grid.n_points;
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
        for (int j = 0; j < n; ++j) {
            out(j, j) = diag((n - j) % n, (n - j) % n);
        }
        return out;
    }
    const Eigen::MatrixXcd u = frft_matrix(grid, to_mask_frame);
    const Eigen::MatrixXcd d = omega_matrix_direct(meas, k, grid);
    return u.adjoint() * d * u;
}

RotatedOmega omega_matrix_rotated(const PcgMeasurement& meas, int k,
                                  RotationAngle frame, const GridSpec& grid,
                                  const SeriesTruncation& trunc) {
    if (k < 0 || k >= meas.mask.dim) {
        throw IndexOutOfRange("omega_matrix_rotated: bin index outside [0, d)");
    }
    const RotationAngle dtheta = frame - meas.direction;
    if (dtheta.is_degenerate()) {
        throw DegenerateAngle("omega_matrix_rotated: frame parallel to the mask direction");
    }
    const double s = dtheta.sin();
    const double cot = dtheta.cos() / s;
    const double tau = kTwoPi * s / meas.mask.period;
    const int n = grid.n_points;
    const double h = grid.spacing();
    const double phase_k = kTwoPi * k / meas.mask.dim + meas.mask.origin * tau / s;

    RotatedOmega result;
    result.matrix = Eigen::MatrixXcd::Zero(n, n);
    for (int nn = -trunc.n_max; nn <= trunc.n_max; ++nn) {
        const Complex fn = fourier_coefficient(nn, meas.mask.dim);
        if (fn == Complex(0.0, 0.0)) continue;
        const double shift = nn * tau;
        const int offset = static_cast<int>(std::lround(shift / h));
        const int i_begin = std::max(0, offset);
        const int i_end = std::min(n, n + offset);
        result.dropped_weight +=
            std::abs(fn) * static_cast<double>(n - (i_end - i_begin)) / n;
        for (int i = i_begin; i < i_end; ++i) {
            const double phi = tau * (grid.coord(i) - 0.5 * shift) * cot - phase_k;
            result.matrix(i, i - offset) += fn * std::polar(1.0, nn * phi) * h;
        }
    }
    return result;
}

}  // namespace pcgmub
