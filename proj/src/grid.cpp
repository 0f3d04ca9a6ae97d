#include "pcgmub/grid.hpp"

#include <cmath>
#include <utility>

#include "pcgmub/frft.hpp"

namespace pcgmub {

namespace {
constexpr double kEnvelopeTolerance = 1e-12;
}

GridSpec::GridSpec(double center_, double half_extent_, int n_points_)
    : center(center_), half_extent(half_extent_), n_points(n_points_) {
    if (!(half_extent > 0.0)) {
        throw Error("GridSpec: half_extent must be positive");
    }
    if (n_points < 16) {
        throw Error("GridSpec: need at least 16 sample points");
    }
}

Eigen::ArrayXd GridSpec::coords() const {
    const double h = spacing();
    return center - half_extent +
           h * Eigen::ArrayXd::LinSpaced(n_points, 0.0, n_points - 1.0);
}

WaveFunction::WaveFunction(GridSpec grid, Eigen::VectorXcd amplitudes)
    : grid_(grid), amp_(std::move(amplitudes)) {
    if (amp_.size() != grid_.n_points) {
        throw Error("WaveFunction: amplitude count does not match the grid");
    }
}

WaveFunction WaveFunction::from_samples(GridSpec grid, Eigen::VectorXcd amplitudes) {
    return WaveFunction(grid, std::move(amplitudes));
}

WaveFunction WaveFunction::normalized(GridSpec grid, Eigen::VectorXcd amplitudes) {
    WaveFunction psi(grid, std::move(amplitudes));
    const double n = psi.norm();
    if (!(n > 1e-12)) {
        throw Error("WaveFunction: cannot normalize a (near-)zero state");
    }
    psi.amp_ /= n;
    return psi;
}

double WaveFunction::norm() const {
    return std::sqrt(amp_.squaredNorm() * grid_.spacing());
}

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid() == b.grid())) {
        throw Error("inner_product: states live on different grids");
    }
    return a.amplitudes().dot(b.amplitudes()) * a.grid().spacing();
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid() == b.grid())) {
        throw Error("l2_distance: states live on different grids");
    }
    return std::sqrt((a.amplitudes() - b.amplitudes()).squaredNorm() *
                     a.grid().spacing());
}

double l2_distance_up_to_phase(const WaveFunction& a, const WaveFunction& b) {
    const double na2 = a.amplitudes().squaredNorm() * a.grid().spacing();
    const double nb2 = b.amplitudes().squaredNorm() * b.grid().spacing();
    const double ov = std::abs(inner_product(a, b));
    return std::sqrt(std::max(0.0, na2 + nb2 - 2.0 * ov));
}

WaveFunction gaussian_state(const GridSpec& grid, double center, double sigma,
                            double tilt) {
    if (!(sigma > 0.0)) {
        throw NonPositiveWidth("gaussian_state: sigma must be positive");
    }
    // Envelope must be negligible at both window edges, otherwise the cut
    // tails silently corrupt every downstream tolerance.
    for (double edge : {grid.center - grid.half_extent, grid.center + grid.half_extent}) {
        const double u = (edge - center) / (2.0 * sigma);
        if (std::exp(-u * u) > kEnvelopeTolerance) {
            throw EnvelopeClipped("gaussian_state: envelope exceeds 1e-12 at a grid edge");
        }
    }
    const Eigen::ArrayXd q = grid.coords();
    const Eigen::ArrayXd envelope = (-((q - center) / (2.0 * sigma)).square()).exp();
    Eigen::ArrayXcd amp =
        envelope.cast<Complex>() * (Complex(0.0, 1.0) * tilt * q).exp();
    return WaveFunction::normalized(grid, amp.matrix());
}

double quadrature_variance(const WaveFunction& psi, double theta) {
    const WaveFunction rotated = apply_frft(psi, RotationAngle(theta));
    const GridSpec& g = rotated.grid();
    const Eigen::ArrayXd q = g.coords();
    const Eigen::ArrayXd weight =
        rotated.amplitudes().array().abs2() * g.spacing();
    const double total = weight.sum();
    const double mean = (q * weight).sum() / total;
    return ((q - mean).square() * weight).sum() / total;
}

}  // namespace pcgmub
