#include "pcgmub/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>

namespace pcgmub {

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw Error("ProbabilityDistribution: empty");
    }
    double sum = 0.0;
    for (double v : values_) {
        if (v < -1e-9 || v > 1.0 + 1e-9) {
            throw Error("ProbabilityDistribution: entry outside [0, 1]");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error("ProbabilityDistribution: does not sum to 1");
    }
    for (double& v : values_) {
        v = std::clamp(v, 0.0, 1.0);
    }
}

ProbabilityDistribution ProbabilityDistribution::from_weights(
    std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw Error("ProbabilityDistribution: negative weight");
        sum += w;
    }
    if (!(sum > 0.0)) throw Error("ProbabilityDistribution: zero total weight");
    for (double& w : weights) w /= sum;
    return ProbabilityDistribution(std::move(weights));
}

ProbabilityDistribution ProbabilityDistribution::uniform(int dim) {
    if (dim < 1) throw Error("ProbabilityDistribution: dim must be positive");
    return ProbabilityDistribution(std::vector<double>(dim, 1.0 / dim));
}

double kl_divergence(const ProbabilityDistribution& p,
                     const ProbabilityDistribution& q) {
    if (p.size() != q.size()) {
        throw Error("kl_divergence: dimension mismatch");
    }
    double sum = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) {
            throw AbsoluteContinuityViolated(
                "kl_divergence: P has mass where Q vanishes");
        }
        sum += p[i] * std::log2(p[i] / q[i]);
    }
    return std::max(sum, 0.0);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

ProbabilityDistribution sample_uniform_simplex(int dim, std::mt19937_64& rng) {
    if (dim < 1) throw Error("sample_uniform_simplex: dim must be positive");
    if (dim == 1) return ProbabilityDistribution({1.0});
    std::vector<double> draws(dim);
    double sum = 0.0;
    do {
        sum = 0.0;
        for (double& v : draws) {
            v = -std::log(uniform01(rng));
            sum += v;
        }
    } while (!(sum > 0.0));
    for (double& v : draws) v /= sum;
    return ProbabilityDistribution(std::move(draws));
}

ProbabilityDistribution sample_uniform_simplex(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_uniform_simplex(dim, rng);
}

double exceedance_fraction(const std::vector<double>& sample_divergences,
                           double threshold) {
    if (sample_divergences.empty()) {
        throw EmptySample("exceedance_fraction: empty sample");
    }
    const auto above = std::count_if(sample_divergences.begin(),
                                     sample_divergences.end(),
                                     [&](double v) { return v > threshold; });
    return static_cast<double>(above) / sample_divergences.size();
}

PoissonizedCounts poissonize(const ProbabilityDistribution& p,
                             long long total_counts, std::uint64_t seed) {
    if (total_counts < 1) {
        throw Error("poissonize: total_counts must be at least 1");
    }
    std::mt19937_64 rng(seed);
    PoissonizedCounts out;
    out.counts.resize(p.size(), 0);
    long long sum = 0;
    for (int i = 0; i < p.size(); ++i) {
        const double mean = total_counts * p[i];
        if (mean > 0.0) {
            std::poisson_distribution<long long> dist(mean);
            out.counts[i] = dist(rng);
        }
        sum += out.counts[i];
    }
    out.frequencies.resize(p.size(), 0.0);
    if (sum > 0) {
        for (int i = 0; i < p.size(); ++i) {
            out.frequencies[i] = static_cast<double>(out.counts[i]) / sum;
        }
    }
    return out;
}

double Histogram::bin_left(int i) const {
    return lo + (hi - lo) * i / probability.size();
}

double Histogram::bin_right(int i) const {
    return lo + (hi - lo) * (i + 1) / probability.size();
}

Histogram make_histogram(const std::vector<double>& values, int bins, double lo,
                         double hi) {
    if (bins < 1 || !(hi > lo)) {
        throw Error("make_histogram: invalid binning");
    }
    if (values.empty()) {
        throw EmptySample("make_histogram: empty sample");
    }
    Histogram h{lo, hi, std::vector<double>(bins, 0.0)};
    for (double v : values) {
        int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
        i = std::clamp(i, 0, bins - 1);
        h.probability[i] += 1.0;
    }
    for (double& p : h.probability) p /= values.size();
    return h;
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
    os << "bin_left,bin_right,probability\n";
    for (int i = 0; i < h.bins(); ++i) {
        os << h.bin_left(i) << ',' << h.bin_right(i) << ',' << h.probability[i]
           << '\n';
    }
}

}  // namespace pcgmub
