#include "photonstat/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "photonstat/numerics.hpp"

namespace photonstat {

const char* to_string(EntropyFamily family) {
  switch (family) {
    case EntropyFamily::Renyi: return "renyi";
    case EntropyFamily::Tsallis: return "tsallis";
    case EntropyFamily::Shannon: return "shannon";
  }
  return "?";
}

namespace {

double shannon(std::span<const double> probs) {
  NeumaierSum sum;
  for (double p : probs) {
    if (p > 0.0) sum.add(-p * std::log(p));
  }
  return sum.value();
}

// ln sum_i p_i^q via a log-sum-exp over the positive entries, stable for
// large q where p_max^q underflows.
double log_power_sum(std::span<const double> probs, double q) {
  double max_term = -std::numeric_limits<double>::infinity();
  for (double p : probs) {
    if (p > 0.0) max_term = std::max(max_term, q * std::log(p));
  }
  if (!std::isfinite(max_term)) {
    throw std::domain_error("distribution has no positive entries");
  }
  NeumaierSum sum;
  for (double p : probs) {
    if (p > 0.0) sum.add(std::exp(q * std::log(p) - max_term));
  }
  return max_term + std::log(sum.value());
}

}  // namespace

double entropy(std::span<const double> probs, const EntropyQuery& query) {
  if (probs.empty()) {
    throw std::domain_error("distribution must have at least one entry");
  }
  if (query.family == EntropyFamily::Shannon) {
    return shannon(probs);
  }
  const double q = query.q;
  require_finite(q, "entropic index");
  if (q < 0.0) {
    throw std::domain_error("entropic index q must be non-negative");
  }
  // Both families converge to Shannon at q = 1; route a small window there.
  if (std::abs(q - 1.0) < 1e-6) {
    return shannon(probs);
  }
  const double log_sum = log_power_sum(probs, q);
  if (query.family == EntropyFamily::Renyi) {
    return log_sum / (1.0 - q);
  }
  return std::expm1(log_sum) / (1.0 - q);  // Tsallis
}

double entropy(const PhotonDistribution& d, const EntropyQuery& query) {
  return entropy(std::span<const double>(d.probs()), query);
}

SchurReport schur_consistency(const PhotonDistribution& a,
                              const PhotonDistribution& b,
                              std::span<const double> q_grid, double tol) {
  const MajorizationVerdict verdict =
      compare(order_profile(a), order_profile(b), tol);
  if (verdict.order == Order::Equal || verdict.order == Order::Incomparable) {
    throw std::invalid_argument(
        "schur_consistency needs a strictly comparable pair; got " +
        std::string(to_string(verdict.order)));
  }

  const PhotonDistribution& majorizer =
      verdict.order == Order::Majorizes ? a : b;
  const PhotonDistribution& majorized =
      verdict.order == Order::Majorizes ? b : a;

  SchurReport report;
  report.order = verdict.order;
  for (double q : q_grid) {
    for (EntropyFamily family :
         {EntropyFamily::Renyi, EntropyFamily::Tsallis}) {
      const double h_maj = entropy(majorizer, EntropyQuery{family, q});
      const double h_min = entropy(majorized, EntropyQuery{family, q});
      // The majorized (more mixed) distribution must not have the smaller
      // entropy.
      if (h_min < h_maj - 1e-12 * std::max(1.0, std::abs(h_maj))) {
        report.violations.push_back(SchurViolation{family, q, h_maj, h_min});
      }
    }
  }
  return report;
}

}  // namespace photonstat
