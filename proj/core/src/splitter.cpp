#include "photonstat/splitter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "photonstat/numerics.hpp"

namespace photonstat {

const char* to_string(ClusterClass cls) {
  switch (cls) {
    case ClusterClass::Clustering: return "clustering";
    case ClusterClass::AntiClustering: return "anti_clustering";
    case ClusterClass::Incomparable: return "incomparable";
    case ClusterClass::Equal: return "equal";
  }
  return "?";
}

SignedCountDistribution::SignedCountDistribution(std::vector<double> probs,
                                                 int m_max, double tail_bound,
                                                 std::string label)
    : probs_(std::move(probs)),
      m_max_(m_max),
      tail_bound_(tail_bound),
      label_(std::move(label)) {
  if (m_max_ < 0 ||
      probs_.size() != static_cast<std::size_t>(2 * m_max_ + 1)) {
    throw std::domain_error("signed count distribution needs 2 m_max + 1 entries");
  }
  NeumaierSum sum;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::domain_error("probabilities must be finite and non-negative");
    }
    sum.add(p);
  }
  const double mass = sum.value();
  const double slack =
      10.0 * std::numeric_limits<double>::epsilon() * probs_.size();
  if (mass < 1.0 - tail_bound_ - slack || mass > 1.0 + slack) {
    throw std::domain_error("signed count mass inconsistent with tail bound");
  }
}

Moments SignedCountDistribution::moments() const {
  NeumaierSum first;
  NeumaierSum second;
  for (int m = -m_max_; m <= m_max_; ++m) {
    const double p = prob(m);
    first.add(m * p);
    second.add(static_cast<double>(m) * m * p);
  }
  Moments out;
  out.mean = first.value();
  out.variance = second.value() - out.mean * out.mean;
  out.tail_error = tail_bound_ * static_cast<double>(m_max_) * m_max_;
  return out;
}

PhotonDistribution number_sum_distribution(const PhotonDistribution& d) {
  // Lossless splitter: every photon reaches one of the detectors, so the
  // sum statistics are the input statistics.
  return PhotonDistribution(d.probs(), d.tail_bound(),
                            "sum[" + d.label() + "]");
}

SignedCountDistribution number_difference_distribution(
    const PhotonDistribution& d) {
  const int n_max = d.n_max();
  const LogFactorialTable lf(static_cast<std::size_t>(n_max));
  const long double log2 = std::log(2.0L);

  std::vector<double> probs(static_cast<std::size_t>(2 * n_max + 1), 0.0);
  for (int m = -n_max; m <= n_max; ++m) {
    // Only n of the same parity as m contribute: each photon flips one
    // detector, so n and n1 - n2 are congruent mod 2.
    NeumaierSum sum;
    for (int n = std::abs(m); n <= n_max; n += 2) {
      const double p = d.probs()[static_cast<std::size_t>(n)];
      if (p == 0.0) continue;
      const std::size_t k = static_cast<std::size_t>((n + m) / 2);
      const long double log_w =
          log_binomial(lf, static_cast<std::size_t>(n), k) - n * log2;
      sum.add(p * static_cast<double>(std::exp(log_w)));
    }
    probs[static_cast<std::size_t>(m + n_max)] = sum.value();
  }
  return SignedCountDistribution(std::move(probs), n_max, d.tail_bound(),
                                 "difference[" + d.label() + "]");
}

double detector_covariance(const PhotonDistribution& d) {
  const Moments m = moments(d);
  return 0.25 * (m.variance - m.mean);
}

ClusterVerdict classify_clustering(const PhotonDistribution& d, double tol) {
  const OrderedProfile sum_profile = order_profile(number_sum_distribution(d));
  const OrderedProfile diff_profile =
      order_profile(number_difference_distribution(d));
  const MajorizationVerdict mv = compare(sum_profile, diff_profile, tol);

  ClusterVerdict verdict;
  verdict.covariance = detector_covariance(d);
  switch (mv.order) {
    case Order::Majorizes:
      // The sum profile dominates: less uncertainty in the number sum.
      verdict.cls = ClusterClass::AntiClustering;
      break;
    case Order::MajorizedBy:
      verdict.cls = ClusterClass::Clustering;
      break;
    case Order::Equal:
      verdict.cls = ClusterClass::Equal;
      break;
    case Order::Incomparable:
      verdict.cls = ClusterClass::Incomparable;
      verdict.crossings = mv.crossings;
      break;
  }
  return verdict;
}

double prob_single_detector_silent(const PhotonDistribution& d) {
  // P(n1 = 0) + P(n2 = 0) - P(n = 0) = sum_n p_n 2^{1-n} - p_0.
  NeumaierSum sum;
  for (int n = 0; n <= d.n_max(); ++n) {
    sum.add(std::ldexp(d.probs()[static_cast<std::size_t>(n)], 1 - n));
  }
  sum.add(-d.probs()[0]);
  return sum.value();
}

OrderedProfile order_profile(const SignedCountDistribution& d) {
  return order_profile(std::span<const double>(d.probs()), d.tail_bound(),
                       d.label());
}

}  // namespace photonstat
