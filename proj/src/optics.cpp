#include "pcgmub/optics.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "pcgmub/mub.hpp"

namespace pcgmub {

BenchSpec BenchSpec::standard() {
    BenchSpec bench;
    bench.wavelength = 635e-9;
    bench.focal_length = 0.400;
    bench.pixel_length = 8e-6;
    bench.stages = {Stage::lens(0.400, 0.200)};
    return bench;
}

RotationAngle lens_angle(double focal_length, double distance) {
    if (!(focal_length > 0.0)) {
        throw OutOfRange("lens_angle: focal length must be positive");
    }
    if (!(distance > 0.0) || distance > 2.0 * focal_length) {
        throw OutOfRange("lens_angle: need 0 < z <= 2f");
    }
    return RotationAngle(2.0 * std::asin(std::sqrt(distance / (2.0 * focal_length))));
}

double frft_lens_distance(double focal_length, RotationAngle theta) {
    if (!(focal_length > 0.0)) {
        throw OutOfRange("frft_lens_distance: focal length must be positive");
    }
    const double t = theta.radians();
    if (!(t > 0.0) || t > std::numbers::pi) {
        throw OutOfRange("frft_lens_distance: theta must lie in (0, pi]");
    }
    const double s = std::sin(0.5 * t);
    return 2.0 * focal_length * s * s;
}

double scaling_factor(double wavelength, double focal_length, RotationAngle theta) {
    if (!(wavelength > 0.0) || !(focal_length > 0.0)) {
        throw OutOfRange("scaling_factor: lengths must be positive");
    }
    if (theta.sin_sign() <= 0) {
        throw DegenerateAngle("scaling_factor: requires sin(theta) > 0");
    }
    return std::sqrt(wavelength * focal_length * theta.sin() /
                     (2.0 * std::numbers::pi));
}

double scaling_factor(const BenchSpec& bench) {
    for (const Stage& stage : bench.stages) {
        if (stage.kind == Stage::Kind::kLens) {
            return scaling_factor(bench.wavelength, bench.focal_length,
                                  lens_angle(stage.focal_length, stage.distance));
        }
    }
    throw Error("scaling_factor: bench has no lens stage");
}

double physical_period(int dim, const BenchSpec& bench, const std::array<int, 3>& m) {
    const TriplePeriods t = triple_periods(m[0], m[1], m[2], dim);
    return t.t_x * scaling_factor(bench);
}

double round_half_to_even(double x) {
    const double floor_part = std::floor(x);
    const double frac = x - floor_part;
    if (frac > 0.5) return floor_part + 1.0;
    if (frac < 0.5) return floor_part;
    return std::fmod(floor_part, 2.0) == 0.0 ? floor_part : floor_part + 1.0;
}

double quantize_to_pixels(double period, double pixel_length) {
    if (!(pixel_length > 0.0)) {
        throw OutOfRange("quantize_to_pixels: pixel length must be positive");
    }
    return pixel_length * round_half_to_even(period / pixel_length);
}

ComposedRotation compose_stages(const BenchSpec& bench) {
    double total = 0.0;
    bool flipped = false;
    for (const Stage& stage : bench.stages) {
        if (stage.kind == Stage::Kind::kLens) {
            total += lens_angle(stage.focal_length, stage.distance).radians();
        } else {
            total += std::numbers::pi;
            flipped = !flipped;
        }
    }
    return ComposedRotation{RotationAngle(total), flipped};
}

std::vector<PeriodRow> period_table(const BenchSpec& bench) {
    std::vector<PeriodRow> rows;
    for (int d = 2; d <= 10; ++d) {
        const double t = physical_period(d, bench);
        const double t_exp = quantize_to_pixels(t, bench.pixel_length);
        rows.push_back(PeriodRow{d, t * 1e6, t / bench.pixel_length, t_exp * 1e6});
    }
    return rows;
}

void write_period_table_csv(std::ostream& os, const std::vector<PeriodRow>& rows) {
    os << "d,T_um,T_over_l,T_exp_um\n";
    char line[128];
    for (const PeriodRow& row : rows) {
        std::snprintf(line, sizeof(line), "%d,%.1f,%.1f,%lld\n", row.dim,
                      row.period_um, row.period_per_pixel,
                      static_cast<long long>(std::llround(row.quantized_um)));
        os << line;
    }
}

}  // namespace pcgmub
