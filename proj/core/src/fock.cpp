#include "photonstat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "photonstat/errors.hpp"
#include "photonstat/numerics.hpp"

namespace photonstat {

namespace {

// Ladder coefficients sqrt(n) appear in both generators; the generators
// are real and antisymmetric on the truncated basis, so the flow
// preserves the norm up to the mass pushed past the truncation edge.

// w[n] = (r/2) (sqrt(n(n-1)) v[n-2] - sqrt((n+1)(n+2)) v[n+2])
void apply_squeeze_generator(double r, const std::vector<double>& v,
                             std::vector<double>& w) {
  const int dim = static_cast<int>(v.size());
  for (int n = 0; n < dim; ++n) {
    double acc = 0.0;
    if (n >= 2) {
      acc += std::sqrt(static_cast<double>(n) * (n - 1)) * v[n - 2];
    }
    if (n + 2 < dim) {
      acc -= std::sqrt(static_cast<double>(n + 1) * (n + 2)) * v[n + 2];
    }
    w[n] = 0.5 * r * acc;
  }
}

// w[n] = R (sqrt(n) v[n-1] - sqrt(n+1) v[n+1])
void apply_displacement_generator(double big_r, const std::vector<double>& v,
                                  std::vector<double>& w) {
  const int dim = static_cast<int>(v.size());
  for (int n = 0; n < dim; ++n) {
    double acc = 0.0;
    if (n >= 1) {
      acc += std::sqrt(static_cast<double>(n)) * v[n - 1];
    }
    if (n + 1 < dim) {
      acc -= std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
    }
    w[n] = big_r * acc;
  }
}

double norm2(const std::vector<double>& v) {
  NeumaierSum s;
  for (double x : v) s.add(x * x);
  return std::sqrt(std::max(s.value(), 0.0));
}

// exp(K) v by substeps: v <- sum_k (K/s)^k v / k! applied s times, with s
// chosen so the substep generator has 1-norm <= 1 and the Taylor series
// converges at machine precision within a few dozen terms.
template <typename Apply>
void exp_action(const Apply& apply, double norm1, std::vector<double>& v) {
  if (norm1 == 0.0) return;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm1)));
  const double inv_steps = 1.0 / static_cast<double>(steps);
  std::vector<double> term(v.size());
  std::vector<double> next(v.size());
  for (int s = 0; s < steps; ++s) {
    std::vector<double> acc = v;
    term = v;
    for (int k = 1; k <= 64; ++k) {
      apply(term, next);
      const double scale = inv_steps / static_cast<double>(k);
      for (std::size_t i = 0; i < term.size(); ++i) {
        term[i] = next[i] * scale;
        acc[i] += term[i];
      }
      if (norm2(term) <= 1e-20 * std::max(norm2(acc), 1e-300)) break;
    }
    v = acc;
  }
}

}  // namespace

FockVector::FockVector(std::vector<std::complex<double>> amplitudes,
                       std::string label)
    : amplitudes_(std::move(amplitudes)), label_(std::move(label)) {
  if (amplitudes_.empty()) {
    throw std::invalid_argument("Fock vector must have at least one entry");
  }
  NeumaierSum s;
  for (const auto& c : amplitudes_) s.add(std::norm(c));
  deficit_ = std::max(0.0, 1.0 - s.value());
}

bool FockVector::edge_mass_ok() const {
  const std::size_t d = amplitudes_.size();
  double edge = std::norm(amplitudes_[d - 1]);
  if (d >= 2) edge = std::max(edge, std::norm(amplitudes_[d - 2]));
  // Deficits below a few machine epsilons cannot be resolved by the norm
  // sum; floor the guard there.
  const double resolvable =
      std::max(deficit_, 8.0 * std::numeric_limits<double>::epsilon());
  return edge <= 1e-3 * resolvable;
}

std::vector<double> FockVector::photon_probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t n = 0; n < amplitudes_.size(); ++n) {
    p[n] = std::norm(amplitudes_[n]);
  }
  return p;
}

int default_fock_dim(double mean_photons) {
  const double want = std::ceil(8.0 * (mean_photons + 1.0));
  const double capped = std::min(want, static_cast<double>(1 << 30));
  return std::max(64, static_cast<int>(capped));
}

FockVector build_squeezed_state(const SqueezedParams& params, int dim) {
  require_finite(params.displacement, "displacement");
  require_finite(params.squeezing, "squeezing");
  if (dim < kMinFockDim) {
    throw std::invalid_argument("Fock dimension must be at least 16");
  }

  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  v[0] = 1.0;

  // Squeeze first, then displace: the state is D(R) S(r) |0>.
  const double r = params.squeezing;
  if (r != 0.0) {
    // Largest column sum of |K_S|: both ladder terms at the edge.
    double norm1 = 0.0;
    for (int n = 0; n < dim; ++n) {
      double col = 0.0;
      if (n + 2 < dim) col += std::sqrt(static_cast<double>(n + 1) * (n + 2));
      if (n >= 2) col += std::sqrt(static_cast<double>(n) * (n - 1));
      norm1 = std::max(norm1, 0.5 * std::abs(r) * col);
    }
    exp_action(
        [&](const std::vector<double>& x, std::vector<double>& y) {
          apply_squeeze_generator(r, x, y);
        },
        norm1, v);
  }

  const double big_r = params.displacement;
  if (big_r != 0.0) {
    double norm1 = 0.0;
    for (int n = 0; n < dim; ++n) {
      double col = 0.0;
      if (n + 1 < dim) col += std::sqrt(static_cast<double>(n + 1));
      if (n >= 1) col += std::sqrt(static_cast<double>(n));
      norm1 = std::max(norm1, std::abs(big_r) * col);
    }
    exp_action(
        [&](const std::vector<double>& x, std::vector<double>& y) {
          apply_displacement_generator(big_r, x, y);
        },
        norm1, v);
  }

  std::vector<std::complex<double>> amplitudes(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) amplitudes[n] = v[n];
  return FockVector(std::move(amplitudes),
                    "squeezed(R=" + format_double(params.displacement) +
                        ",r=" + format_double(params.squeezing) + ")");
}

FockVector build_squeezed_state_auto(const SqueezedParams& params, double eps,
                                     int dim_cap) {
  require_finite(params.displacement, "displacement");
  require_finite(params.squeezing, "squeezing");
  if (eps <= 0.0 || eps >= 1.0 || !std::isfinite(eps)) {
    throw std::domain_error("tail mass eps must lie in (0, 1)");
  }

  int dim = std::max(kMinFockDim, default_fock_dim(params.mean()));
  if (dim > dim_cap) {
    throw ConvergenceError(
        "squeezed state with mean " + format_double(params.mean()) +
            " needs a Fock dimension of about " + std::to_string(dim) +
            ", beyond the cap " + std::to_string(dim_cap),
        1.0);
  }

  double achieved = 1.0;
  while (true) {
    FockVector state = build_squeezed_state(params, dim);
    achieved = state.truncation_deficit();
    if (achieved + 1e-15 <= eps && state.edge_mass_ok()) {
      return state;
    }
    if (dim > dim_cap / 2) {
      throw ConvergenceError(
          "truncated Fock construction did not reach tail mass " +
              format_double(eps) + " within dimension cap " +
              std::to_string(dim_cap) + " (achieved " +
              format_double(achieved) + ")",
          achieved);
    }
    dim *= 2;
  }
}

}  // namespace photonstat
