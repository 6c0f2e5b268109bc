#pragma once

// Photon-number statistics of the canonical single-mode states: coherent
// (Poissonian), thermal (geometric), photon-number, squeezed coherent, and
// convex mixtures. Closed-form partial sums are exposed where they exist.

#include <string>
#include <vector>

#include "photonstat/distribution.hpp"

namespace photonstat {

// Squeezed coherent state D(R) S(r) |0>, with D(R) = exp[R(a+ - a)] and
// S(r) = exp[(r/2)(a+^2 - a^2)]. R >= 0; r is signed (r < 0 squeezes the
// displacement quadrature and lowers the photon-number variance).
struct SqueezedParams {
  double displacement = 0.0;  // R
  double squeezing = 0.0;     // r

  double mean() const;      // R^2 + sinh^2 r
  double variance() const;  // R^2 e^{2r} + sinh^2(2r)/2

  friend bool operator==(const SqueezedParams&, const SqueezedParams&) = default;
};

struct MixtureSpec {
  double weight;  // xi in [0, 1], applied to `first`
  PhotonDistribution first;
  PhotonDistribution second;
};

// Poisson distribution with the given mean. The tail bound comes from the
// geometric domination of the term ratio mean/(n+1) past the truncation.
PhotonDistribution coherent_distribution(double mean, double eps = kDefaultEps);

// Geometric (Bose-Einstein) distribution; the tail is geometric and the
// truncation point is solved exactly.
PhotonDistribution thermal_distribution(double mean, double eps = kDefaultEps);

// Point mass at n.
PhotonDistribution number_state_distribution(int n);

// Photon-number distribution of D(R)S(r)|0>, built in a truncated Fock
// basis (see fock.hpp) and certified by the construction's norm deficit.
PhotonDistribution squeezed_distribution(const SqueezedParams& params,
                                         double eps = kDefaultEps);

// Literal closed form for the squeezed photon-number probability in terms
// of Hermite polynomials, valid for r > 0 only (for r <= 0 the printed
// form is sign-ambiguous; use squeezed_distribution). Evaluated through a
// log-magnitude/sign recurrence so large n does not overflow.
double squeezed_closed_form(const SqueezedParams& params, int n);

// First `count` values of the closed form in one O(count) sweep.
std::vector<double> squeezed_closed_form_prefix(const SqueezedParams& params,
                                                int count);

// Continuum (Gaussian) model of the ordered partial sums:
// erf(N / (sqrt(2) delta_n)), i.e. the mass within +-N of the mean.
double gaussian_partial_sum(double delta_n, double big_n);

// 1 - (mean/(mean+1))^{N+1}: ordered partial sum of the thermal state.
double thermal_partial_sum_closed_form(double mean, long long big_n);

// Entrywise convex combination; components are zero-padded to a common
// length and never renormalized.
PhotonDistribution mixture(const MixtureSpec& spec);

// Inverts the squeezed-state moment identities: finds (R, r) with the given
// photon-number mean and variance. The pair is not unique: away from the
// boundaries of the attainable range there are two solutions. This returns
// the squeezing-dominated one (largest |r|), the branch that terminates in
// the squeezed vacuum at the variance maximum; a target variance exactly
// equal to the mean returns the coherent limit (R = sqrt(mean), r = 0).
SqueezedParams solve_squeezed_params(double target_mean,
                                     double target_variance);

// All distinct (R, r) solutions, ordered by |r| ascending.
std::vector<SqueezedParams> solve_squeezed_params_all(double target_mean,
                                                      double target_variance);

struct VarianceRange {
  double min_variance;
  double max_variance;  // = 2 mean (mean + 1), the squeezed-vacuum limit
};

// Attainable photon-number variance range at a given mean.
VarianceRange attainable_variance_range(double mean);

}  // namespace photonstat
