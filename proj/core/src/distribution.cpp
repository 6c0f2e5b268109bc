#include "photonstat/distribution.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "photonstat/numerics.hpp"

namespace photonstat {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

// Allowed excess above unit mass from rounding in the construction sums.
double mass_upper_slack(std::size_t n) {
  return 10.0 * std::numeric_limits<double>::epsilon() *
         static_cast<double>(n > 0 ? n : 1);
}

}  // namespace

PhotonDistribution::PhotonDistribution(std::vector<double> probs,
                                       double tail_bound, std::string label)
    : probs_(std::move(probs)),
      tail_bound_(tail_bound),
      label_(std::move(label)) {
  if (probs_.empty()) {
    throw std::domain_error("photon distribution must have at least one entry");
  }
  if (!(tail_bound_ >= 0.0) || !std::isfinite(tail_bound_)) {
    throw std::domain_error("tail bound must be a finite non-negative real");
  }
  NeumaierSum sum;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::domain_error("probabilities must be finite and non-negative");
    }
    sum.add(p);
  }
  const double mass = sum.value();
  if (mass < 1.0 - tail_bound_ - mass_upper_slack(probs_.size()) ||
      mass > 1.0 + mass_upper_slack(probs_.size())) {
    throw std::domain_error("total mass " + std::to_string(mass) +
                            " inconsistent with tail bound for '" + label_ +
                            "'");
  }
}

double PhotonDistribution::total_mass() const {
  NeumaierSum sum;
  for (double p : probs_) sum.add(p);
  return sum.value();
}

Moments moments(const PhotonDistribution& d) {
  NeumaierSum first;
  NeumaierSum second;
  for (std::size_t n = 0; n < d.size(); ++n) {
    const double x = static_cast<double>(n);
    first.add(x * d.probs()[n]);
    second.add(x * x * d.probs()[n]);
  }
  Moments m;
  m.mean = first.value();
  m.variance = second.value() - m.mean * m.mean;
  if (m.variance < 0.0) m.variance = 0.0;  // rounding guard for point masses
  const double nm = static_cast<double>(d.n_max());
  m.tail_error = d.tail_bound() * nm * nm;
  return m;
}

}  // namespace photonstat
