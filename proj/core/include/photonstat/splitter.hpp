#pragma once

// Statistics behind a 50/50 lossless beam splitter fed with the state on
// one port and vacuum on the other: number-sum and number-difference
// distributions, detector covariance, and the clustering criterion (the
// majorization counterpart of bunching).

#include <string>
#include <vector>

#include "photonstat/distribution.hpp"
#include "photonstat/majorize.hpp"

namespace photonstat {

// Probability vector over the signed detector difference m = n1 - n2,
// m = -m_max..+m_max. A fair splitter forces p(m) = p(-m).
class SignedCountDistribution {
 public:
  SignedCountDistribution(std::vector<double> probs, int m_max,
                          double tail_bound, std::string label);

  double prob(int m) const { return probs_[static_cast<size_t>(m + m_max_)]; }
  int m_max() const { return m_max_; }
  // Dense storage indexed by m + m_max.
  const std::vector<double>& probs() const { return probs_; }
  double tail_bound() const { return tail_bound_; }
  const std::string& label() const { return label_; }

  Moments moments() const;

 private:
  std::vector<double> probs_;
  int m_max_;
  double tail_bound_;
  std::string label_;
};

// No photon is lost, so the number sum carries exactly the input
// statistics; only the provenance label changes.
PhotonDistribution number_sum_distribution(const PhotonDistribution& d);

// p(m) = sum_{n >= |m|, n = |m| mod 2} p_n 2^{-n} C(n, (n+m)/2).
// Binomial weights are evaluated in log space; each m is summed with
// compensation over n stepping by 2, preserving the parity structure.
SignedCountDistribution number_difference_distribution(
    const PhotonDistribution& d);

// Covariance of the two detector counts: (variance - mean)/4. Positive
// means bunching, negative anti-bunching.
double detector_covariance(const PhotonDistribution& d);

enum class ClusterClass { Clustering, AntiClustering, Incomparable, Equal };

const char* to_string(ClusterClass cls);

struct ClusterVerdict {
  ClusterClass cls = ClusterClass::Equal;
  std::vector<CrossingPoint> crossings;
  double covariance = 0.0;
};

// Majorization comparison of the number-sum profile against the
// number-difference profile. Sum majorizing difference = anti-clustering
// (less uncertainty in the sum); the reverse = clustering.
ClusterVerdict classify_clustering(const PhotonDistribution& d,
                                   double tol = kDefaultTol);

// P(n1 n2 = 0): probability that at most one detector fires,
// sum_n p_n (2^{1-n} - [n=0]).
double prob_single_detector_silent(const PhotonDistribution& d);

OrderedProfile order_profile(const SignedCountDistribution& d);

}  // namespace photonstat
