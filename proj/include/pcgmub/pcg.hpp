#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pcgmub/frft.hpp"
#include "pcgmub/grid.hpp"

namespace pcgmub {

/// Periodic square-wave detector mask: d bins of width s = period / d tile
/// each period, bin k occupying [k*s, (k+1)*s) relative to the origin.
/// Bins are half-open so the d masks partition the line pointwise.
struct MaskSpec {
    MaskSpec(int dim, double period, double origin = 0.0);

    int dim;        // d
    double period;  // T, dimensionless
    double origin;  // q_cen

    double bin_width() const { return period / dim; }  // s
};

/// A phase-space direction paired with the mask measured along it.
struct PcgMeasurement {
    RotationAngle direction;
    MaskSpec mask;
};

/// Symmetric cutoff |N| <= n_max for the mask's Fourier series.
struct SeriesTruncation {
    explicit SeriesTruncation(int n_max);

    /// Smallest cutoff whose on-grid tail sum of |f_N| drops below tail_bound,
    /// never below d.  Terms shifted off the grid never contribute, so the
    /// tail is scanned only up to the largest shift the grid supports.
    static SeriesTruncation for_tail(int dim, const GridSpec& grid, double tau,
                                     double tail_bound = 1e-4);

    int n_max;
};

/// Index of the bin containing z, in [0, dim).
int bin_index(const MaskSpec& mask, double z);

/// Indicator of bin k at coordinate z (0 or 1).  Throws IndexOutOfRange.
int mask_value(const MaskSpec& mask, int k, double z);

/// Fourier coefficient of the mask bins: f_0 = 1/d and
/// f_N = (1 - e^{-2 pi i N / d}) / (2 pi i N); vanishes for N a nonzero
/// multiple of d.
Complex fourier_coefficient(int n, int dim);

/// Projects psi onto bin k of the measurement: rotate into the measurement
/// frame, apply the mask pointwise, renormalize, rotate back.  Throws
/// EmptyProjection when the mask annihilates the state.
WaveFunction prepare_masked_state(const WaveFunction& psi,
                                  const PcgMeasurement& meas, int k);

/// Outcome probabilities p_k = integral M_k(q_theta) |F_theta psi|^2 dq_theta,
/// clamped to [0, 1].
std::vector<double> pcg_probabilities(const WaveFunction& psi,
                                      const PcgMeasurement& meas);

/// Projector matrix for bin k in the measurement's own frame: diagonal with
/// entries mask_value * spacing.
Eigen::MatrixXcd omega_matrix_direct(const PcgMeasurement& meas, int k,
                                     const GridSpec& grid);

/// Same projector expressed as a quadratic form on frame-theta' wavefunctions:
/// U^dagger D U with U the sampled transform by (direction - frame).
Eigen::MatrixXcd omega_matrix_in_frame(const PcgMeasurement& meas, int k,
                                       RotationAngle frame, const GridSpec& grid);

struct RotatedOmega {
    Eigen::MatrixXcd matrix;
    /// Accumulated |f_N| weight of series terms whose shifted bra fell outside
    /// the grid (averaged over rows).
    double dropped_weight = 0.0;
};

/// Fourier-series form of the projector in the rotated basis theta':
///   sum_N f_N e^{i N phi_k^{(N)}(q')} |q'><q' - N tau|,
/// tau = 2 pi sin(theta' - theta) / T, assembled on the grid with shifts
/// rounded to the nearest sample and off-grid shifts dropped.
RotatedOmega omega_matrix_rotated(const PcgMeasurement& meas, int k,
                                  RotationAngle frame, const GridSpec& grid,
                                  const SeriesTruncation& trunc);

}  // namespace pcgmub
