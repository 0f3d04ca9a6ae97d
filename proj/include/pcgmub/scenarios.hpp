#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcgmub/optics.hpp"
#include "pcgmub/pcg.hpp"
#include "pcgmub/stats.hpp"

namespace pcgmub {

/// Shared knobs for the prepare-and-measure simulations.  A zero extent picks
/// the default half-extent max(11 sigma, 8 max period): wide enough that the
/// Gaussian envelope clears the 1e-12 edge bound and that at least eight mask
/// periods fit.
struct RunConfig {
    int grid_n = 8192;
    double extent = 0.0;  // half-extent; 0 = auto
    double sigma = 4.676445;  // 875 um beam over the standard bench scale
    double center = 0.0;
    double tilt = 0.0;
    std::uint64_t seed = 1;
};

GridSpec make_grid(const RunConfig& config, double max_period);

/// One prepare-and-measure run: the bin-k0 eigenstate of the preparation
/// measurement, probed along the second direction.
struct PairRun {
    std::vector<double> probabilities;  // raw masked-intensity integrals
    double max_deviation;               // max_l |p_l - 1/d|
    double kl_bits;                     // KL(renormalized p || uniform)
    double prepare_period;
    double measure_period;
};

/// Periods are the symmetric solution T = T' = sqrt(2 pi d |sin dtheta| / m).
/// With enforce_valid_m false the excluded (modular-variable) values of m are
/// allowed through, for demonstrating the loss of unbiasedness.
PairRun run_mub_pair(const RunConfig& config, int dim, double theta_prime,
                     double theta, int m, int k0, bool enforce_valid_m = true);

struct TripleRun {
    double theta_prepare;
    double theta_measure;
    PairRun run;
};

/// All six ordered direction pairs of the symmetric triple {0, 2pi/3, 4pi/3}
/// with the m = (1,1,1) periods.
std::vector<TripleRun> run_mub_triple(const RunConfig& config, int dim, int k0);

struct Alpha23Point {
    int bin_width_px;
    double prepare_period;  // dimensionless
    double measure_period;  // dimensionless
    double max_kl_bits;     // worst preparation bin
    double max_deviation;
};

/// Bin-width sweep for the smallest bench angle: two 250 mm lens stages plus a
/// mirror reflection, an effective rotation of about 23 degrees.  Preparation
/// bin widths are integer pixel multiples; measurement periods follow from the
/// unbiasedness condition with m = 1.
std::vector<Alpha23Point> run_alpha23(const RunConfig& config, int dim,
                                      const std::vector<int>& widths_px);

/// The effective rotation of the 23-degree bench (two f=250mm/z=200mm stages
/// plus one reflection).
RotationAngle alpha23_angle();

struct KlHistogramRun {
    int dim;
    double simulated_max_kl;       // worst KL over the ideal triple runs
    std::vector<double> triple_kls;
    Histogram random_baseline;     // flat-Dirichlet KL histogram
    double exceedance;             // fraction of baseline above simulated max
};

/// Random-baseline KL study for one dimension: flat-Dirichlet samples against
/// the worst KL of the simulated triple scenario.
KlHistogramRun run_kl_histogram(const RunConfig& config, int dim, long samples,
                                int bins = 100);

}  // namespace pcgmub
