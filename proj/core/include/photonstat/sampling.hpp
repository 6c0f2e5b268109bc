#pragma once

// Monte-Carlo simulator of the beam-splitter experiment and the exact
// joint enumeration it is tested against. Sampling is reproducible by
// construction: sample i draws from its own SplitMix64 substream keyed by
// (seed, i), so any partition of the index range across workers merges to
// identical counts.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "photonstat/distribution.hpp"
#include "photonstat/splitter.hpp"

namespace photonstat {

// SplitMix64 (Steele, Lea & Flood): 64-bit state advanced by the golden
// ratio, output mixed by two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Substream for sample index i under the given seed.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + index * 0x9E3779B97F4A7C15ULL);
  }

 private:
  std::uint64_t state_;
};

struct SampleReport {
  std::map<std::pair<int, int>, std::uint64_t> joint_counts;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Draws n from the distribution by inverse CDF, then routes each photon to
// a detector with a fair coin: n1 ~ Binomial(n, 1/2) via popcount of n
// random bits, n2 = n - n1. Identical (seed, inputs) give identical
// reports.
SampleReport sample_beam_splitter(const PhotonDistribution& d,
                                  std::uint64_t n_samples, std::uint64_t seed);

// Empirical distribution of m = n1 - n2 on the grid -m_max..m_max.
SignedCountDistribution empirical_difference(const SampleReport& report,
                                             int m_max);

// Empirical distribution of n = n1 + n2 (index = n, length n_max + 1).
std::vector<double> empirical_sum(const SampleReport& report, int n_max);

// Exact joint law p(n1, n2) = p_{n1+n2} 2^{-(n1+n2)} C(n1+n2, n1),
// enumerated over the truncated support. Serves as the independent oracle
// for the splitter marginals and covariance.
class JointDistribution {
 public:
  explicit JointDistribution(const PhotonDistribution& d);

  int n_max() const { return n_max_; }
  double at(int n1, int n2) const;

  // Marginal of n1 + n2 (reproduces the input probabilities).
  std::vector<double> sum_marginal() const;
  // Marginal of n1 - n2 on -n_max..n_max.
  SignedCountDistribution difference_marginal() const;
  double covariance() const;
  double prob_silent() const;  // P(n1 n2 = 0)
  double total() const;

 private:
  std::size_t index(int n, int n1) const;

  int n_max_;
  double tail_bound_;
  std::string label_;
  std::vector<double> probs_;  // triangular layout over (n, n1)
};

inline JointDistribution joint_distribution_brute_force(
    const PhotonDistribution& d) {
  return JointDistribution(d);
}

}  // namespace photonstat
