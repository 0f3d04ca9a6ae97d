#include "pcgmub/frft.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace pcgmub {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

}  // namespace

RotationAngle::RotationAngle(double radians) : value_(reduce_two_pi(radians)) {
    sin_ = std::sin(value_);
    cos_ = std::cos(value_);
}

RotationAngle RotationAngle::from_degrees(double degrees) {
    return RotationAngle(degrees * std::numbers::pi / 180.0);
}

double RotationAngle::degrees() const { return value_ * 180.0 / std::numbers::pi; }

int RotationAngle::sin_sign(double eps) const {
    if (sin_ > eps) return 1;
    if (sin_ < -eps) return -1;
    return 0;
}

bool RotationAngle::is_degenerate(double eps) const { return std::abs(sin_) <= eps; }

RotationAngle RotationAngle::operator+(RotationAngle other) const {
    return RotationAngle(value_ + other.value_);
}

RotationAngle RotationAngle::operator-(RotationAngle other) const {
    return RotationAngle(value_ - other.value_);
}

RotationAngle RotationAngle::operator-() const { return RotationAngle(-value_); }

namespace {

/// Unit-modulus prefactor sqrt(i e^{i theta} / (2 pi |sin theta|)), principal branch.
Complex kernel_prefactor(RotationAngle dtheta) {
    const Complex num = Complex(0.0, 1.0) *
                        std::exp(Complex(0.0, dtheta.radians()));
    return std::sqrt(num / (kTwoPi * std::abs(dtheta.sin())));
}

void require_resolvable(RotationAngle dtheta) {
    if (dtheta.is_degenerate()) {
        throw DegenerateAngle("frft: |sin dtheta| <= 1e-9");
    }
}

/// Reference transform: plain O(N^2) quadrature of the kernel.
Eigen::VectorXcd transform_direct(const Eigen::VectorXcd& psi, const GridSpec& g,
                                  RotationAngle theta) {
    const int n = g.n_points;
    const double s = theta.sin();
    const double cot = theta.cos() / s;
    const double h = g.spacing();
    const Complex pref = kernel_prefactor(theta) * h;

    Eigen::VectorXcd chirped(n);
    for (int j = 0; j < n; ++j) {
        const double q = g.coord(j);
        chirped(j) = std::polar(1.0, 0.5 * cot * q * q) * psi(j);
    }
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
        const double qo = g.coord(k);
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            acc += std::polar(1.0, -qo * g.coord(j) / s) * chirped(j);
        }
        out(k) = pref * std::polar(1.0, 0.5 * cot * qo * qo) * acc;
    }
    return out;
}

void fft_inplace(std::vector<Complex>& data, int sign) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr,
                                      sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

/// Bluestein evaluation of the same discrete sum: the cross term
/// exp(-i q'_k q_j / sin) factors into chirps and a w^{kj} Toeplitz kernel,
/// which becomes a linear convolution after w^{kj} = w^{(k^2+j^2-(k-j)^2)/2}.
Eigen::VectorXcd transform_chirp(const Eigen::VectorXcd& psi, const GridSpec& g,
                                 RotationAngle theta) {
    const int n = g.n_points;
    const double s = theta.sin();
    const double cot = theta.cos() / s;
    const double h = g.spacing();
    const double q0 = g.coord(0);
    const Complex pref = kernel_prefactor(theta) * h;

    std::size_t m = 1;
    while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;

    // b_n = w^{n^2/2} with w = exp(-i h^2 / sin)
    std::vector<Complex> b(n);
    for (int j = 0; j < n; ++j) {
        b[j] = std::polar(1.0, -h * h * static_cast<double>(j) * j / (2.0 * s));
    }

    std::vector<Complex> a(m, Complex(0.0, 0.0));
    for (int j = 0; j < n; ++j) {
        const double q = g.coord(j);
        const Complex u =
            std::polar(1.0, 0.5 * cot * q * q - q0 * h * j / s) * psi(j);
        a[j] = u * b[j];
    }
    std::vector<Complex> c(m, Complex(0.0, 0.0));
    c[0] = std::conj(b[0]);
    for (int j = 1; j < n; ++j) {
        c[j] = std::conj(b[j]);
        c[m - j] = std::conj(b[j]);
    }

    fft_inplace(a, FFTW_FORWARD);
    fft_inplace(c, FFTW_FORWARD);
    for (std::size_t i = 0; i < m; ++i) a[i] *= c[i];
    fft_inplace(a, FFTW_BACKWARD);

    const Complex edge = std::polar(1.0, -q0 * q0 / s);
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
        const double qo = g.coord(k);
        const Complex v =
            std::polar(1.0, 0.5 * cot * qo * qo - q0 * h * k / s) * edge;
        out(k) = pref * v * b[k] * (a[k] / static_cast<double>(m));
    }
    return out;
}

/// Coordinate reflection psi(q) -> psi(-q), exact on a zero-centered grid
/// (index reversal modulo n; the q = -L sample is its own wrap partner).
Eigen::VectorXcd reflect_samples(const Eigen::VectorXcd& psi, const GridSpec& g) {
    if (std::abs(g.center) > 1e-12 * g.half_extent) {
        throw Error("apply_frft: pi rotation requires a grid centered at zero");
    }
    const int n = g.n_points;
    Eigen::VectorXcd out(n);
    for (int j = 0; j < n; ++j) {
        out(j) = psi((n - j) % n);
    }
    return out;
}

/// Largest phase increment of the kernel between adjacent samples.  When this
/// approaches pi the quadrature no longer resolves the integrand oscillation.
double worst_phase_step(const GridSpec& g, RotationAngle theta) {
    const double qmax = std::max(std::abs(g.center - g.half_extent),
                                 std::abs(g.center + g.half_extent));
    return g.spacing() * qmax * (1.0 + std::abs(theta.cos())) / std::abs(theta.sin());
}

WaveFunction apply_frft_impl(const WaveFunction& psi, RotationAngle theta,
                             FrftMethod method, bool allow_split) {
    const GridSpec& g = psi.grid();
    if (theta.is_degenerate()) {
        if (theta.cos() > 0.0) {
            return WaveFunction::from_samples(g, psi.amplitudes());
        }
        return WaveFunction::from_samples(g, reflect_samples(psi.amplitudes(), g));
    }

    // Ill-resolved angles (|sin theta| small relative to the grid) are routed
    // through a pi/2 factor; both factors then oscillate slowly enough.
    if (allow_split && worst_phase_step(g, theta) > 0.5 * std::numbers::pi) {
        const RotationAngle quarter(0.5 * std::numbers::pi);
        const RotationAngle rest = theta - quarter;
        if (worst_phase_step(g, quarter) <= 0.5 * std::numbers::pi &&
            (rest.is_degenerate() ||
             worst_phase_step(g, rest) <= 0.5 * std::numbers::pi)) {
            return apply_frft_impl(apply_frft_impl(psi, quarter, method, false),
                                   rest, method, false);
        }
    }

    Eigen::VectorXcd out = (method == FrftMethod::kDirect)
                               ? transform_direct(psi.amplitudes(), g, theta)
                               : transform_chirp(psi.amplitudes(), g, theta);
    return WaveFunction::from_samples(g, std::move(out));
}

}  // namespace

Complex frft_kernel(double q_out, double q_in, RotationAngle dtheta) {
    require_resolvable(dtheta);
    const double s = dtheta.sin();
    const double cot = dtheta.cos() / s;
    return kernel_prefactor(dtheta) *
           std::polar(1.0, 0.5 * cot * (q_in * q_in + q_out * q_out) -
                               q_in * q_out / s);
}

Eigen::MatrixXcd frft_matrix(const GridSpec& grid, RotationAngle dtheta) {
    require_resolvable(dtheta);
    const int n = grid.n_points;
    const double s = dtheta.sin();
    const double cot = dtheta.cos() / s;
    const Complex pref = kernel_prefactor(dtheta) * grid.spacing();
    Eigen::MatrixXcd u(n, n);
    for (int i = 0; i < n; ++i) {
        const double qo = grid.coord(i);
        for (int j = 0; j < n; ++j) {
            const double qi = grid.coord(j);
            u(i, j) = pref * std::polar(1.0, 0.5 * cot * (qi * qi + qo * qo) -
                                                 qi * qo / s);
        }
    }
    return u;
}

WaveFunction apply_frft(const WaveFunction& psi, RotationAngle theta,
                        FrftMethod method) {
    return apply_frft_impl(psi, theta, method, method != FrftMethod::kChirp);
}

}  // namespace pcgmub
