#pragma once

// Truncated Fock-space construction of squeezed coherent states. This is
// the production backend for squeezed_distribution and the independent
// ground truth the closed forms are tested against: the displacement and
// squeezing generators are exponentiated directly onto the vacuum vector,
// with no reference to any photon-number formula.

#include <complex>
#include <vector>

#include "photonstat/states.hpp"

namespace photonstat {

inline constexpr int kMinFockDim = 16;
inline constexpr int kDefaultFockDimCap = 1 << 15;

class FockVector {
 public:
  FockVector(std::vector<std::complex<double>> amplitudes, std::string label);

  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const std::string& label() const { return label_; }

  // 1 - sum |c_n|^2, clamped at zero.
  double truncation_deficit() const { return deficit_; }

  // True when the mass sitting on the last two basis states is negligible
  // against the deficit: max(|c_{dim-1}|^2, |c_{dim-2}|^2) <= 1e-3 * deficit.
  // The deficit is floored at a few machine epsilons, below which it cannot
  // be resolved by the norm sum; the pair of entries covers the strict
  // even/odd parity of squeezed vacua.
  bool edge_mass_ok() const;

  // |c_n|^2 for every n.
  std::vector<double> photon_probabilities() const;

 private:
  std::vector<std::complex<double>> amplitudes_;
  std::string label_;
  double deficit_;
};

// Default truncation dimension for a state with the given mean photon
// number: max(64, ceil(8 (mean + 1))). Squeezing populates a long tail,
// hence the wide margin; the edge-mass guard verifies it after the fact.
int default_fock_dim(double mean_photons);

// Amplitudes of D(R) S(r) |0> on the first `dim` Fock states. Both
// generator exponentials are applied by substepped Taylor expansion of the
// (banded, antisymmetric) generator acting on the state vector; each
// substep has generator norm <= 1 so the series converges at machine
// precision in a few terms.
FockVector build_squeezed_state(const SqueezedParams& params, int dim);

// Doubles the dimension (starting from default_fock_dim) until the
// truncation deficit is <= eps and the edge-mass guard holds. Throws
// ConvergenceError with the achieved deficit once dim_cap is exceeded.
FockVector build_squeezed_state_auto(const SqueezedParams& params, double eps,
                                     int dim_cap = kDefaultFockDimCap);

}  // namespace photonstat
