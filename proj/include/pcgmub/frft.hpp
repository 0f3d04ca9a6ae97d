#pragma once

#include <Eigen/Dense>

#include "pcgmub/grid.hpp"

namespace pcgmub {

/// |sin theta| at or below this is treated as a degenerate rotation (0 or pi).
inline constexpr double kAngleEpsilon = 1e-9;

/// Phase-space rotation angle, stored reduced to [0, 2*pi).
class RotationAngle {
  public:
    RotationAngle() = default;
    explicit RotationAngle(double radians);
    static RotationAngle from_degrees(double degrees);

    double radians() const { return value_; }
    double degrees() const;
    double sin() const { return sin_; }
    double cos() const { return cos_; }

    /// sign(sin theta): +1, -1, or 0 when degenerate.
    int sin_sign(double eps = kAngleEpsilon) const;
    bool is_degenerate(double eps = kAngleEpsilon) const;

    RotationAngle operator+(RotationAngle other) const;
    RotationAngle operator-(RotationAngle other) const;
    RotationAngle operator-() const;

  private:
    double value_ = 0.0;
    double sin_ = 0.0;
    double cos_ = 1.0;
};

/// Fractional Fourier kernel
///   sqrt(i e^{i dtheta} / (2 pi |sin dtheta|)) *
///   exp[ i (cot dtheta / 2)(q_in^2 + q_out^2) - i q_in q_out / sin dtheta ],
/// principal branch of the square root.  Throws DegenerateAngle when
/// |sin dtheta| <= kAngleEpsilon.
Complex frft_kernel(double q_out, double q_in, RotationAngle dtheta);

/// Dense sampled transform: U_ij = spacing * kernel(q_i, q_j), so that
/// (U psi) approximates the continuum transform on grid-adequate states.
Eigen::MatrixXcd frft_matrix(const GridSpec& grid, RotationAngle dtheta);

enum class FrftMethod {
    kAuto,    // chirp path, split through pi/2 when the grid cannot resolve theta
    kDirect,  // O(N^2) kernel quadrature (reference path)
    kChirp,   // Bluestein chirp convolution via FFT
};

/// psi'(q') = integral dq K(q', q; theta) psi(q) on the input grid.
/// theta within kAngleEpsilon of 0 (mod 2pi) returns a copy; within
/// kAngleEpsilon of pi returns the coordinate-reflected state.
WaveFunction apply_frft(const WaveFunction& psi, RotationAngle theta,
                        FrftMethod method = FrftMethod::kAuto);

}  // namespace pcgmub
