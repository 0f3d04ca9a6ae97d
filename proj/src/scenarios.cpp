#include "pcgmub/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pcgmub/mub.hpp"

namespace pcgmub {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PairRun measure_prepared(const WaveFunction& prepared, double theta,
                         double prepare_period, double measure_period, int dim) {
    const PcgMeasurement meas{RotationAngle(theta), MaskSpec(dim, measure_period)};
    PairRun out;
    out.probabilities = pcg_probabilities(prepared, meas);
    out.prepare_period = prepare_period;
    out.measure_period = measure_period;
    out.max_deviation = 0.0;
    for (double p : out.probabilities) {
        out.max_deviation = std::max(out.max_deviation, std::abs(p - 1.0 / dim));
    }
    out.kl_bits = kl_divergence(ProbabilityDistribution::from_weights(out.probabilities),
                                ProbabilityDistribution::uniform(dim));
    return out;
}

}  // namespace

GridSpec make_grid(const RunConfig& config, double max_period) {
    double half = config.extent;
    if (half <= 0.0) {
        half = std::max(11.0 * config.sigma, 8.0 * max_period);
    }
    return GridSpec(0.0, half, config.grid_n);
}

PairRun run_mub_pair(const RunConfig& config, int dim, double theta_prime,
                     double theta, int m, int k0, bool enforce_valid_m) {
    if (m < 1) {
        throw InvalidM("run_mub_pair: m must be a natural number");
    }
    if (enforce_valid_m && !is_valid_m(m, dim)) {
        throw InvalidM("run_mub_pair: m fails the admissibility rule");
    }
    const RotationAngle dtheta = RotationAngle(theta) - RotationAngle(theta_prime);
    if (dtheta.is_degenerate()) {
        throw DegenerateAngle("run_mub_pair: directions are parallel");
    }
    const double period = std::sqrt(kTwoPi * dim * std::abs(dtheta.sin()) / m);

    const GridSpec grid = make_grid(config, period);
    const WaveFunction beam =
        gaussian_state(grid, config.center, config.sigma, config.tilt);
    const PcgMeasurement prep{RotationAngle(theta_prime), MaskSpec(dim, period)};
    const WaveFunction prepared = prepare_masked_state(beam, prep, k0);
    return measure_prepared(prepared, theta, period, period, dim);
}

std::vector<TripleRun> run_mub_triple(const RunConfig& config, int dim, int k0) {
    const TriplePeriods periods = triple_periods(1, 1, 1, dim);
    const double directions[3] = {0.0, 2.0 * std::numbers::pi / 3.0,
                                  4.0 * std::numbers::pi / 3.0};
    const double period_of[3] = {periods.t_x, periods.t_r, periods.t_s};

    const GridSpec grid = make_grid(config, periods.t_x);
    const WaveFunction beam =
        gaussian_state(grid, config.center, config.sigma, config.tilt);

    std::vector<TripleRun> out;
    for (int i = 0; i < 3; ++i) {
        const PcgMeasurement prep{RotationAngle(directions[i]),
                                  MaskSpec(dim, period_of[i])};
        const WaveFunction prepared = prepare_masked_state(beam, prep, k0);
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            out.push_back(TripleRun{
                directions[i], directions[j],
                measure_prepared(prepared, directions[j], period_of[i],
                                 period_of[j], dim)});
        }
    }
    return out;
}

RotationAngle alpha23_angle() {
    BenchSpec bench;
    bench.wavelength = 635e-9;
    bench.focal_length = 0.250;
    bench.stages = {Stage::lens(0.250, 0.200), Stage::lens(0.250, 0.200),
                    Stage::reflection()};
    return compose_stages(bench).effective();
}

std::vector<Alpha23Point> run_alpha23(const RunConfig& config, int dim,
                                      const std::vector<int>& widths_px) {
    const RotationAngle alpha = alpha23_angle();
    // Pixel pitch in dimensionless units on the 250 mm bench.
    const double pixel = 8e-6 / scaling_factor(635e-9, 0.250, lens_angle(0.250, 0.200));

    std::vector<Alpha23Point> out;
    for (int w : widths_px) {
        if (w < 1) {
            throw OutOfRange("run_alpha23: bin width must be at least one pixel");
        }
        const double prep_period = dim * w * pixel;
        const double meas_period =
            kTwoPi * dim * std::abs(alpha.sin()) / prep_period;

        const GridSpec grid =
            make_grid(config, std::max(prep_period, meas_period));
        const WaveFunction beam =
            gaussian_state(grid, config.center, config.sigma, config.tilt);

        Alpha23Point point{w, prep_period, meas_period, 0.0, 0.0};
        for (int k0 = 0; k0 < dim; ++k0) {
            const PcgMeasurement prep{RotationAngle(0.0), MaskSpec(dim, prep_period)};
            const WaveFunction prepared = prepare_masked_state(beam, prep, k0);
            const PairRun run = measure_prepared(prepared, alpha.radians(),
                                                 prep_period, meas_period, dim);
            point.max_kl_bits = std::max(point.max_kl_bits, run.kl_bits);
            point.max_deviation = std::max(point.max_deviation, run.max_deviation);
        }
        out.push_back(point);
    }
    return out;
}

KlHistogramRun run_kl_histogram(const RunConfig& config, int dim, long samples,
                                int bins) {
    if (samples < 1000) {
        throw Error("run_kl_histogram: need at least 1e3 samples");
    }
    KlHistogramRun out;
    out.dim = dim;

    const int k0 = 2 % dim;
    for (const TripleRun& run : run_mub_triple(config, dim, k0)) {
        out.triple_kls.push_back(run.run.kl_bits);
    }
    out.simulated_max_kl =
        *std::max_element(out.triple_kls.begin(), out.triple_kls.end());

    std::mt19937_64 rng(config.seed);
    const ProbabilityDistribution uniform = ProbabilityDistribution::uniform(dim);
    std::vector<double> divergences;
    divergences.reserve(samples);
    for (long i = 0; i < samples; ++i) {
        divergences.push_back(
            kl_divergence(sample_uniform_simplex(dim, rng), uniform));
    }
    out.random_baseline = make_histogram(divergences, bins, 0.0, std::log2(dim));
    out.exceedance = exceedance_fraction(divergences, out.simulated_max_kl);
    return out;
}

}  // namespace pcgmub
