#include "pcgmub/mub.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace pcgmub {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegeneracyTol = 1e-7;  // angle coincidence mod pi

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

bool coincident_mod_pi(double a, double b, double tol = kDegeneracyTol) {
    const double d = std::remainder(a - b, std::numbers::pi);
    return std::abs(d) <= tol;
}

}  // namespace

bool is_valid_m(int m, int dim) {
    if (m < 1) return false;
    for (int n = 1; n < dim; ++n) {
        if ((static_cast<long long>(m) * n) % dim == 0) return false;
    }
    return true;
}

std::vector<int> valid_m_values(int dim, int m_max) {
    if (dim < 2 || m_max < 1) {
        throw Error("valid_m_values: need d >= 2 and m_max >= 1");
    }
    std::vector<int> out;
    for (int m = 1; m <= m_max; ++m) {
        if (is_valid_m(m, dim)) out.push_back(m);
    }
    return out;
}

std::optional<int> check_pair(double period_a, double period_b,
                              RotationAngle dtheta, int dim, double tol) {
    if (dtheta.is_degenerate()) {
        throw DegenerateAngle("check_pair: parallel directions");
    }
    if (!(period_a > 0.0) || !(period_b > 0.0)) {
        throw Error("check_pair: periods must be positive");
    }
    const double m_star =
        kTwoPi * dim * std::abs(dtheta.sin()) / (period_a * period_b);
    const double rounded = std::round(m_star);
    if (std::abs(m_star - rounded) >= tol * m_star) return std::nullopt;
    const int m = static_cast<int>(rounded);
    if (!is_valid_m(m, dim)) return std::nullopt;
    return m;
}

double pair_period(double reference_period, RotationAngle dtheta, int dim, int m) {
    if (dtheta.is_degenerate()) {
        throw DegenerateAngle("pair_period: parallel directions");
    }
    if (!is_valid_m(m, dim)) {
        throw InvalidM("pair_period: m fails the admissibility rule");
    }
    return kTwoPi * dim * std::abs(dtheta.sin()) / (m * reference_period);
}

TriplePeriods triple_periods(int m1, int m2, int m3, int dim) {
    for (int m : {m1, m2, m3}) {
        if (!is_valid_m(m, dim)) {
            throw InvalidM("triple_periods: m fails the admissibility rule");
        }
    }
    const double base = std::sqrt(3.0) * std::numbers::pi * dim;
    const double t_x = std::sqrt(base * m3 / (static_cast<double>(m1) * m2));
    return TriplePeriods{t_x, m2 * t_x / m3, m1 * t_x / m3};
}

std::array<double, 3> triple_periods_for_angles(RotationAngle theta2,
                                                RotationAngle theta3, int dim) {
    const double s12 = std::abs(theta2.sin());
    const double s13 = std::abs(theta3.sin());
    const double s23 = std::abs((theta3 - theta2).sin());
    if (s12 <= kAngleEpsilon || s13 <= kAngleEpsilon || s23 <= kAngleEpsilon) {
        throw DegenerateAngle("triple_periods_for_angles: parallel directions");
    }
    const double t1 = std::sqrt(kTwoPi * dim * s12 * s13 / s23);
    return {t1, kTwoPi * dim * s12 / t1, kTwoPi * dim * s13 / t1};
}

std::vector<std::vector<std::optional<int>>> check_all_pairs(const MubConfig& config,
                                                             double tol) {
    const std::size_t k = config.directions.size();
    std::vector<std::vector<std::optional<int>>> out(
        k, std::vector<std::optional<int>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto& [ti, pi_] = config.directions[i];
            const auto& [tj, pj] = config.directions[j];
            out[i][j] = out[j][i] = check_pair(pi_, pj, tj - ti, config.dim, tol);
        }
    }
    return out;
}

QuadrupleResidual quadruple_residual(RotationAngle theta2, RotationAngle theta3,
                                     RotationAngle theta4) {
    for (RotationAngle t : {theta2, theta3, theta4}) {
        if (t.is_degenerate()) {
            throw ExcludedAngle("quadruple_residual: direction reproduces +-x");
        }
    }
    const double cot2 = theta2.cos() / theta2.sin();
    if (std::abs(cot2) <= 1e-9) {
        throw ExcludedAngle("quadruple_residual: cot(theta2) vanishes");
    }
    const double zeta3 = (theta3.cos() / theta3.sin()) / cot2;
    const double zeta4 = (theta4.cos() / theta4.sin()) / cot2;
    const double residual =
        std::max(std::abs(std::abs(zeta3 - 1.0) - std::abs(zeta4 - 1.0)),
                 std::abs(std::abs(zeta4 - zeta3) - std::abs(zeta4 - 1.0)));
    const bool degenerate =
        coincident_mod_pi(theta2.radians(), theta3.radians()) ||
        coincident_mod_pi(theta2.radians(), theta4.radians()) ||
        coincident_mod_pi(theta3.radians(), theta4.radians());
    return QuadrupleResidual{zeta3, zeta4, residual, degenerate};
}

QuadrupleSearchResult search_quadruples(long trials, std::uint64_t seed) {
    if (trials < 1) {
        throw Error("search_quadruples: trials must be at least 1");
    }
    std::mt19937_64 rng(seed);
    QuadrupleSearchResult result{std::numeric_limits<double>::infinity(),
                                 {0.0, 0.0, 0.0},
                                 0,
                                 0,
                                 true};
    for (long t = 0; t < trials; ++t) {
        const double a2 = uniform01(rng) * kTwoPi;
        const double a3 = uniform01(rng) * kTwoPi;
        const double a4 = uniform01(rng) * kTwoPi;
        QuadrupleResidual r{};
        try {
            r = quadruple_residual(RotationAngle(a2), RotationAngle(a3),
                                   RotationAngle(a4));
        } catch (const ExcludedAngle&) {
            ++result.skipped;
            continue;
        }
        if (r.degenerate) {
            ++result.skipped;
            continue;
        }
        ++result.accepted;
        if (r.residual < 1e-6) result.certificate_ok = false;
        if (r.residual < result.min_residual) {
            result.min_residual = r.residual;
            result.argmin = {a2, a3, a4};
        }
    }
    return result;
}

}  // namespace pcgmub
