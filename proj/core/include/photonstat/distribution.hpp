#pragma once

// Photon-number distributions: dense probability vectors over n = 0..n_max
// together with a certified bound on the truncated tail mass.

#include <cstddef>
#include <string>
#include <vector>

namespace photonstat {

// Default certified tail mass for truncated constructions.
inline constexpr double kDefaultEps = 1e-12;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  // Upper bound on the moment error induced by the truncated tail.
  double tail_error = 0.0;
};

class PhotonDistribution {
 public:
  // probs[n] is the probability of n photons; tail_bound is a certified
  // upper bound on the omitted mass beyond n_max. Throws std::domain_error
  // if the entries are negative/non-finite or the total mass is
  // inconsistent with tail_bound.
  PhotonDistribution(std::vector<double> probs, double tail_bound,
                     std::string label);

  const std::vector<double>& probs() const { return probs_; }
  double tail_bound() const { return tail_bound_; }
  const std::string& label() const { return label_; }

  std::size_t size() const { return probs_.size(); }
  int n_max() const { return static_cast<int>(probs_.size()) - 1; }
  double total_mass() const;

 private:
  std::vector<double> probs_;
  double tail_bound_;
  std::string label_;
};

// First and second moments by direct summation; tail_error reports the
// n_max^2 * tail_bound contribution the truncation may hide.
Moments moments(const PhotonDistribution& d);

}  // namespace photonstat
