#pragma once

// Schur-concave uncertainty measures (Renyi, Tsallis, Shannon) used to
// corroborate majorization verdicts. Natural logarithms throughout.

#include <span>
#include <vector>

#include "photonstat/distribution.hpp"
#include "photonstat/majorize.hpp"

namespace photonstat {

enum class EntropyFamily { Renyi, Tsallis, Shannon };

const char* to_string(EntropyFamily family);

struct EntropyQuery {
  EntropyFamily family = EntropyFamily::Shannon;
  double q = 1.0;  // entropic index, >= 0; ignored for Shannon
};

// Zero entries contribute nothing (0 log 0 = 0, 0^q = 0). Indices within
// 1e-6 of q = 1 are routed to the Shannon limit. Throws std::domain_error
// for q < 0.
double entropy(std::span<const double> probs, const EntropyQuery& query);
double entropy(const PhotonDistribution& d, const EntropyQuery& query);

struct SchurViolation {
  EntropyFamily family;
  double q;
  double h_majorizer;
  double h_majorized;
};

// For a strictly comparable pair, the majorized distribution must have the
// larger entropy for every index and both families.
struct SchurReport {
  Order order;
  std::vector<SchurViolation> violations;
};

// Requires compare(a, b) to be strict (throws std::invalid_argument on
// Equal or Incomparable pairs); checks Renyi and Tsallis at every q in the
// grid and reports any ordering violations (there should be none).
SchurReport schur_consistency(const PhotonDistribution& a,
                              const PhotonDistribution& b,
                              std::span<const double> q_grid,
                              double tol = kDefaultTol);

}  // namespace photonstat
