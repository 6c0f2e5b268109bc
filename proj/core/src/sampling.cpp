#include "photonstat/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "photonstat/numerics.hpp"

namespace photonstat {

namespace {

// Binomial(n, 1/2) as the popcount of n random bits.
int fair_binomial(SplitMix64& rng, int n) {
  int ones = 0;
  while (n >= 64) {
    ones += std::popcount(rng.next());
    n -= 64;
  }
  if (n > 0) {
    const std::uint64_t mask = (~0ULL) >> (64 - n);
    ones += std::popcount(rng.next() & mask);
  }
  return ones;
}

}  // namespace

SampleReport sample_beam_splitter(const PhotonDistribution& d,
                                  std::uint64_t n_samples,
                                  std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::domain_error("need at least one sample");
  }

  std::vector<double> cumulative(d.size());
  NeumaierSum sum;
  for (std::size_t n = 0; n < d.size(); ++n) {
    sum.add(d.probs()[n]);
    cumulative[n] = sum.value();
  }

  SampleReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    SplitMix64 rng = SplitMix64::substream(seed, i);
    const double u = rng.next_double();
    // Inverse CDF; a draw beyond the truncated mass (probability at most
    // the tail bound) lands on the last retained outcome.
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const int n = it == cumulative.end()
                      ? d.n_max()
                      : static_cast<int>(it - cumulative.begin());
    const int n1 = fair_binomial(rng, n);
    report.joint_counts[{n1, n - n1}] += 1;
  }
  return report;
}

SignedCountDistribution empirical_difference(const SampleReport& report,
                                             int m_max) {
  std::vector<double> probs(static_cast<std::size_t>(2 * m_max + 1), 0.0);
  const double w = 1.0 / static_cast<double>(report.n_samples);
  for (const auto& [pair, count] : report.joint_counts) {
    const int m = pair.first - pair.second;
    if (std::abs(m) > m_max) {
      throw std::invalid_argument("sampled difference exceeds m_max");
    }
    probs[static_cast<std::size_t>(m + m_max)] +=
        static_cast<double>(count) * w;
  }
  return SignedCountDistribution(std::move(probs), m_max, 0.0,
                                 "empirical_difference(seed=" +
                                     std::to_string(report.seed) + ")");
}

std::vector<double> empirical_sum(const SampleReport& report, int n_max) {
  std::vector<double> probs(static_cast<std::size_t>(n_max + 1), 0.0);
  const double w = 1.0 / static_cast<double>(report.n_samples);
  for (const auto& [pair, count] : report.joint_counts) {
    const int n = pair.first + pair.second;
    if (n > n_max) {
      throw std::invalid_argument("sampled sum exceeds n_max");
    }
    probs[static_cast<std::size_t>(n)] += static_cast<double>(count) * w;
  }
  return probs;
}

std::size_t JointDistribution::index(int n, int n1) const {
  return static_cast<std::size_t>(n) * (n + 1) / 2 +
         static_cast<std::size_t>(n1);
}

JointDistribution::JointDistribution(const PhotonDistribution& d)
    : n_max_(d.n_max()), tail_bound_(d.tail_bound()), label_(d.label()) {
  const LogFactorialTable lf(static_cast<std::size_t>(n_max_));
  const long double log2 = std::log(2.0L);
  probs_.assign(index(n_max_, n_max_) + 1, 0.0);
  for (int n = 0; n <= n_max_; ++n) {
    const double p = d.probs()[static_cast<std::size_t>(n)];
    if (p == 0.0) continue;
    const long double log_p =
        std::log(static_cast<long double>(p)) - n * log2;
    for (int n1 = 0; n1 <= n; ++n1) {
      probs_[index(n, n1)] = static_cast<double>(
          std::exp(log_p + log_binomial(lf, static_cast<std::size_t>(n),
                                        static_cast<std::size_t>(n1))));
    }
  }
}

double JointDistribution::at(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > n_max_) return 0.0;
  return probs_[index(n1 + n2, n1)];
}

std::vector<double> JointDistribution::sum_marginal() const {
  std::vector<double> out(static_cast<std::size_t>(n_max_) + 1, 0.0);
  for (int n = 0; n <= n_max_; ++n) {
    NeumaierSum row;
    for (int n1 = 0; n1 <= n; ++n1) row.add(probs_[index(n, n1)]);
    out[static_cast<std::size_t>(n)] = row.value();
  }
  return out;
}

SignedCountDistribution JointDistribution::difference_marginal() const {
  std::vector<NeumaierSum> bins(static_cast<std::size_t>(2 * n_max_ + 1));
  for (int n = 0; n <= n_max_; ++n) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const int m = 2 * n1 - n;
      bins[static_cast<std::size_t>(m + n_max_)].add(probs_[index(n, n1)]);
    }
  }
  std::vector<double> probs(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) probs[i] = bins[i].value();
  return SignedCountDistribution(std::move(probs), n_max_, tail_bound_,
                                 "difference[" + label_ + "]");
}

double JointDistribution::covariance() const {
  NeumaierSum e1;
  NeumaierSum e2;
  NeumaierSum e12;
  for (int n = 0; n <= n_max_; ++n) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const double p = probs_[index(n, n1)];
      const int n2 = n - n1;
      e1.add(n1 * p);
      e2.add(n2 * p);
      e12.add(static_cast<double>(n1) * n2 * p);
    }
  }
  return e12.value() - e1.value() * e2.value();
}

double JointDistribution::prob_silent() const {
  NeumaierSum sum;
  for (int n = 0; n <= n_max_; ++n) {
    sum.add(probs_[index(n, 0)]);
    if (n > 0) sum.add(probs_[index(n, n)]);
  }
  return sum.value();
}

double JointDistribution::total() const {
  NeumaierSum sum;
  for (double p : probs_) sum.add(p);
  return sum.value();
}

}  // namespace photonstat
