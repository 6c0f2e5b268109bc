#pragma once

// The comparison engine: descending rearrangement, ordered partial sums,
// majorization verdicts with crossing detection, confidence intervals, and
// the Poissonian classification.

#include <span>
#include <string>
#include <vector>

#include "photonstat/distribution.hpp"

namespace photonstat {

// Default tolerance for treating two partial sums as equal at an index.
inline constexpr double kDefaultTol = 1e-10;

// Descending rearrangement p_sorted plus cumulative partial sums
// S_N = sum_{j<=N} p_sorted[j] (compensated summation).
struct OrderedProfile {
  std::vector<double> sorted_probs;
  std::vector<double> partial_sums;
  double tail_bound = 0.0;
  std::string source_label;
};

enum class Order { Majorizes, MajorizedBy, Equal, Incomparable };
enum class ProfileSide { A, B };

// One sign change of S_a - S_b.
//
// n_interp locates the crossing of the piecewise-linear interpolants in
// continuous 0-based index coordinates; interval_size() restates it in the
// outcome-count convention used when quoting confidence-interval sizes.
// alpha is the confidence level at which the confidence-interval ordering
// flips: just above it the new leader's intervals are strictly smaller. It
// equals the smaller of the two partial sums at the first index past the
// crossing where the new order holds beyond tolerance.
struct CrossingPoint {
  double n_interp = 0.0;
  double alpha = 0.0;
  ProfileSide above_before = ProfileSide::A;

  double interval_size() const { return n_interp + 1.0; }
};

struct MajorizationVerdict {
  Order order = Order::Equal;
  std::vector<CrossingPoint> crossings;  // non-empty iff Incomparable
  double tolerance = kDefaultTol;
};

const char* to_string(Order order);

OrderedProfile order_profile(const PhotonDistribution& d);

// Generic entry point used for non-photon-number vectors (e.g. signed
// count distributions).
OrderedProfile order_profile(std::span<const double> probs, double tail_bound,
                             std::string label);

// Elementwise comparison of the zero-padded partial-sum sequences.
// Majorizes: S_a >= S_b - tol everywhere with strict excess somewhere.
// Equal: |S_a - S_b| <= tol everywhere. Incomparable: strict excursions
// both ways, each sign change reported as a CrossingPoint. Throws
// std::domain_error when the two total masses differ beyond the combined
// tail budget.
MajorizationVerdict compare(const OrderedProfile& a, const OrderedProfile& b,
                            double tol = kDefaultTol);

// Minimal N with S_N >= alpha (the interval covers N+1 outcomes). Throws
// std::domain_error if alpha exceeds the achievable mass, naming the
// deficit.
int confidence_interval(const OrderedProfile& p, double alpha);

struct EquivalenceViolation {
  double alpha;
  int n_a;
  int n_b;
};

// Checks the confidence-interval formulation of majorization on an alpha
// grid: when compare() says b precedes a, every interval of b must be at
// least as large as a's. For incomparable pairs the expected direction is
// taken from the leader before the first crossing, so violations map out
// the far side of the crossing.
struct EquivalenceReport {
  MajorizationVerdict verdict;
  // True when the check expected N_b(alpha) >= N_a(alpha).
  bool expected_b_larger = true;
  std::vector<EquivalenceViolation> violations;
};

EquivalenceReport equivalence_check(const OrderedProfile& a,
                                    const OrderedProfile& b,
                                    std::span<const double> alphas,
                                    double tol = kDefaultTol);

// Majorization-based counterpart of the sub/super-Poissonian variance
// test: the distribution is compared against the Poisson distribution of
// the same mean. OverPoissonian = majorizes it (less uncertain),
// UnderPoissonian = majorized by it.
enum class PoissonClass {
  OverPoissonian,
  UnderPoissonian,
  Incomparable,
  Poissonian
};

const char* to_string(PoissonClass cls);

struct PoissonVerdict {
  PoissonClass cls = PoissonClass::Poissonian;
  std::vector<CrossingPoint> crossings;
  double mean = 0.0;
};

// Zero-mean input (vacuum) is classified Poissonian: the same-mean Poisson
// reference degenerates to the vacuum itself.
PoissonVerdict classify_poissonian(const PhotonDistribution& d,
                                   double tol = kDefaultTol,
                                   double eps = kDefaultEps);

// Canonical dense confidence grid: 999 points from 0.01 to 0.999.
std::vector<double> alpha_grid_999();

}  // namespace photonstat
