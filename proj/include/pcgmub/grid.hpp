#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pcgmub/errors.hpp"

namespace pcgmub {

using Complex = std::complex<double>;

/// Uniform, endpoint-exclusive sampling of the dimensionless quadrature axis.
/// Sample j sits at q_j = center - half_extent + j * spacing, j = 0..n-1,
/// with spacing = 2 * half_extent / n.  The right endpoint is excluded so that
/// discrete transforms treat the window consistently.
struct GridSpec {
    GridSpec(double center, double half_extent, int n_points);

    double center;
    double half_extent;
    int n_points;

    double spacing() const { return 2.0 * half_extent / n_points; }
    double coord(int j) const { return center - half_extent + j * spacing(); }
    Eigen::ArrayXd coords() const;

    bool operator==(const GridSpec& other) const = default;
};

/// Sampled complex amplitude of a 1-D quadrature wavefunction.  Construct via
/// normalized() (rectangle-rule norm forced to 1) or from_samples() (kept
/// as-is, e.g. for the output of a unitary transform).
class WaveFunction {
  public:
    static WaveFunction normalized(GridSpec grid, Eigen::VectorXcd amplitudes);
    static WaveFunction from_samples(GridSpec grid, Eigen::VectorXcd amplitudes);

    const GridSpec& grid() const { return grid_; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    int size() const { return static_cast<int>(amp_.size()); }

    /// Rectangle-rule L2 norm: sqrt(sum_j |psi_j|^2 * spacing).
    double norm() const;

  private:
    WaveFunction(GridSpec grid, Eigen::VectorXcd amplitudes);

    GridSpec grid_;
    Eigen::VectorXcd amp_;
};

/// Rectangle-rule inner product <a|b> = sum_j conj(a_j) b_j * spacing.
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

/// ||a - b|| in the rectangle-rule L2 norm.
double l2_distance(const WaveFunction& a, const WaveFunction& b);

/// min over phi of ||exp(i phi) a - b||.  Collapses to sqrt(|a|^2 + |b|^2 -
/// 2 |<a|b>|); used wherever a global phase is physically irrelevant.
double l2_distance_up_to_phase(const WaveFunction& a, const WaveFunction& b);

/// Normalized Gaussian proportional to exp(-(q - center)^2 / (4 sigma^2)) *
/// exp(i tilt q).  Throws NonPositiveWidth, or EnvelopeClipped when the
/// envelope exceeds 1e-12 at either grid edge.
WaveFunction gaussian_state(const GridSpec& grid, double center, double sigma,
                            double tilt = 0.0);

/// Second central moment of |F_theta psi|^2: rotate the state by theta, then
/// take the variance of the resulting intensity over the grid.
double quadrature_variance(const WaveFunction& psi, double theta);

}  // namespace pcgmub
