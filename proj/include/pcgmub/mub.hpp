#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcgmub/frft.hpp"

namespace pcgmub {

/// Unbiasedness of two periodic coarse grainings along directions separated by
/// dtheta holds when T T' / (2 pi) = d |sin dtheta| / m for an admissible
/// natural number m: one for which m*n/d is never an integer, n = 1..d-1.

/// All admissible m in [1, m_max], by direct enumeration of the defining rule.
std::vector<int> valid_m_values(int dim, int m_max);

bool is_valid_m(int m, int dim);

/// Detects the m realized by a period pair: m* = 2 pi d |sin dtheta| / (T T').
/// Returns round(m*) when it is within tol (relative) and admissible.
std::optional<int> check_pair(double period_a, double period_b,
                              RotationAngle dtheta, int dim, double tol = 1e-6);

/// Solves the unbiasedness condition for the partner period:
/// 2 pi d |sin dtheta| / (m * reference_period).  Throws InvalidM.
double pair_period(double reference_period, RotationAngle dtheta, int dim, int m);

struct TriplePeriods {
    double t_x;  // direction 0
    double t_r;  // direction 2 pi / 3
    double t_s;  // direction 4 pi / 3
};

/// Periods making the symmetric triple {0, 2pi/3, 4pi/3} pairwise unbiased
/// with integers (m1, m2, m3) on the (x,r), (x,s), (r,s) pairs:
/// T_x = sqrt(sqrt(3) pi d m3 / (m1 m2)), T_r = (m2/m3) T_x, T_s = (m1/m3) T_x.
TriplePeriods triple_periods(int m1, int m2, int m3, int dim);

/// m = 1 periods for a general non-parallel triple {0, theta2, theta3}.
std::array<double, 3> triple_periods_for_angles(RotationAngle theta2,
                                                RotationAngle theta3, int dim);

/// A set of directions and periods to be checked pairwise.
struct MubConfig {
    int dim;
    std::vector<std::pair<RotationAngle, double>> directions;  // (theta_i, T_i)
};

/// Pairwise m detected for every i < j; nullopt where no admissible m fits.
std::vector<std::vector<std::optional<int>>> check_all_pairs(const MubConfig& config,
                                                             double tol = 1e-6);

/// Residual of the two consistency conditions that a fourth unbiased direction
/// would have to satisfy, in the variables zeta_i = cot(theta_i)/cot(theta_2):
/// |zeta3 - 1| = |zeta4 - 1| = |zeta4 - zeta3|.
struct QuadrupleResidual {
    double zeta3;
    double zeta4;
    double residual;
    /// Angles coincide mod pi within 1e-7 (the only exact solution).
    bool degenerate;
};

/// Throws ExcludedAngle when any direction reproduces +-x (theta in {0, pi})
/// or when cot(theta2) vanishes (all directions would collapse onto +-p).
QuadrupleResidual quadruple_residual(RotationAngle theta2, RotationAngle theta3,
                                     RotationAngle theta4);

struct QuadrupleSearchResult {
    double min_residual;           // over accepted (non-degenerate) samples
    std::array<double, 3> argmin;  // theta2, theta3, theta4
    long accepted;
    long skipped;  // degenerate or excluded draws
    /// False if any non-degenerate sample had residual < 1e-6.
    bool certificate_ok;
};

/// Uniform random search over angle triples (theta1 fixed at 0); returns the
/// minimum residual as a randomized certificate that no fourth direction fits.
QuadrupleSearchResult search_quadruples(long trials, std::uint64_t seed);

}  // namespace pcgmub
