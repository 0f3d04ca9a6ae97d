#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "pcgmub/frft.hpp"

namespace pcgmub {

/// One element of a lens train: a single converging lens placed symmetrically
/// at distance z from its object and image planes, or a mirror reflection.
struct Stage {
    enum class Kind { kLens, kReflection };

    static Stage lens(double focal_length, double distance) {
        return Stage{Kind::kLens, focal_length, distance};
    }
    static Stage reflection() { return Stage{Kind::kReflection, 0.0, 0.0}; }

    Kind kind;
    double focal_length;  // meters
    double distance;      // meters, lens-to-plane separation z
};

/// Physical bench parameters.  All lengths in meters.
struct BenchSpec {
    double wavelength;
    double focal_length;
    double pixel_length = 8e-6;
    std::vector<Stage> stages;

    /// 635 nm diode, 400 mm lens at 200 mm (a pi/3 stage), 8 um pixels.
    static BenchSpec standard();
};

/// Rotation angle of a symmetric single-lens stage: z = 2 f sin^2(theta/2),
/// theta in (0, pi].  Throws OutOfRange unless 0 < z <= 2f.
RotationAngle lens_angle(double focal_length, double distance);

/// Inverse of lens_angle on theta in (0, pi].
double frft_lens_distance(double focal_length, RotationAngle theta);

/// Transverse-coordinate scale delta = sqrt(lambda f sin(theta) / (2 pi))
/// mapping physical lengths to dimensionless quadratures.  Requires
/// sin(theta) > 0.
double scaling_factor(double wavelength, double focal_length, RotationAngle theta);

/// Scale of the bench's reference stage (its first lens).
double scaling_factor(const BenchSpec& bench);

/// Physical mask period for the symmetric triple at dimension d:
/// dimensionless triple period times the bench scale.
double physical_period(int dim, const BenchSpec& bench,
                       const std::array<int, 3>& m = {1, 1, 1});

/// Nearest realizable period on a pixelated modulator: l * round(T / l),
/// ties to even pixel counts.
double quantize_to_pixels(double period, double pixel_length);

double round_half_to_even(double x);

/// Net rotation of a lens train.  Each reflection contributes pi and flips
/// the coordinate axis; the flag records the flip so callers can undo the
/// outcome relabeling k -> d-1-k it induces.
struct ComposedRotation {
    RotationAngle net;
    bool axis_flipped;

    /// Direction the train is equivalent to once the axis flip is undone.
    RotationAngle effective() const {
        return axis_flipped ? -net : net;
    }
};

ComposedRotation compose_stages(const BenchSpec& bench);

struct PeriodRow {
    int dim;
    double period_um;        // ideal mask period
    double period_per_pixel; // period / pixel length
    double quantized_um;     // nearest integer pixel count
};

/// Rows d = 2..10 of the bench's mask-period table.
std::vector<PeriodRow> period_table(const BenchSpec& bench);

/// CSV with header "d,T_um,T_over_l,T_exp_um"; T and T/l to one decimal,
/// T_exp as an integer.
void write_period_table_csv(std::ostream& os, const std::vector<PeriodRow>& rows);

}  // namespace pcgmub
