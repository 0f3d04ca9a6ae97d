#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "pcgmub/errors.hpp"

namespace pcgmub {

/// A discrete probability distribution: entries in [0, 1] summing to 1.
class ProbabilityDistribution {
  public:
    explicit ProbabilityDistribution(std::vector<double> values);

    /// Normalizes nonnegative weights by their sum (the detector convention:
    /// outcomes divided by the total count).
    static ProbabilityDistribution from_weights(std::vector<double> weights);

    static ProbabilityDistribution uniform(int dim);

    const std::vector<double>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }

  private:
    std::vector<double> values_;
};

/// Relative entropy sum_i P_i log2(P_i / Q_i) in bits, with 0 log 0 = 0.
/// Throws AbsoluteContinuityViolated when P_i > 0 while Q_i = 0.
double kl_divergence(const ProbabilityDistribution& p,
                     const ProbabilityDistribution& q);

/// Uniform double in (0, 1] with 53 random bits; keeps sampling reproducible
/// independent of the standard library's distribution internals.
double uniform01(std::mt19937_64& rng);

/// Flat Dirichlet (uniform on the simplex): normalized i.i.d. Exp(1) draws.
ProbabilityDistribution sample_uniform_simplex(int dim, std::mt19937_64& rng);
ProbabilityDistribution sample_uniform_simplex(int dim, std::uint64_t seed);

/// Fraction of samples strictly greater than the threshold.
double exceedance_fraction(const std::vector<double>& sample_divergences,
                           double threshold);

struct PoissonizedCounts {
    std::vector<long long> counts;
    /// Counts renormalized by their sum (all-zero counts stay zero).
    std::vector<double> frequencies;
};

/// Independent Poisson draws with means total_counts * P_i.
PoissonizedCounts poissonize(const ProbabilityDistribution& p,
                             long long total_counts, std::uint64_t seed);

struct Histogram {
    double lo;
    double hi;
    std::vector<double> probability;  // per bin, sums to the in-range fraction

    double bin_left(int i) const;
    double bin_right(int i) const;
    int bins() const { return static_cast<int>(probability.size()); }
};

/// Equal-width histogram of values on [lo, hi]; out-of-range values are
/// clamped into the edge bins.
Histogram make_histogram(const std::vector<double>& values, int bins, double lo,
                         double hi);

/// CSV with header "bin_left,bin_right,probability".
void write_histogram_csv(std::ostream& os, const Histogram& h);

}  // namespace pcgmub
