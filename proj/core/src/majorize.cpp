#include "photonstat/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "photonstat/numerics.hpp"
#include "photonstat/states.hpp"

namespace photonstat {

const char* to_string(Order order) {
  switch (order) {
    case Order::Majorizes: return "majorizes";
    case Order::MajorizedBy: return "majorized_by";
    case Order::Equal: return "equal";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

const char* to_string(PoissonClass cls) {
  switch (cls) {
    case PoissonClass::OverPoissonian: return "over_poissonian";
    case PoissonClass::UnderPoissonian: return "under_poissonian";
    case PoissonClass::Incomparable: return "incomparable";
    case PoissonClass::Poissonian: return "poissonian";
  }
  return "?";
}

OrderedProfile order_profile(std::span<const double> probs, double tail_bound,
                             std::string label) {
  OrderedProfile profile;
  profile.sorted_probs.assign(probs.begin(), probs.end());
  std::stable_sort(profile.sorted_probs.begin(), profile.sorted_probs.end(),
                   std::greater<double>());
  profile.partial_sums.reserve(profile.sorted_probs.size());
  NeumaierSum sum;
  for (double p : profile.sorted_probs) {
    sum.add(p);
    profile.partial_sums.push_back(sum.value());
  }
  profile.tail_bound = tail_bound;
  profile.source_label = std::move(label);
  return profile;
}

OrderedProfile order_profile(const PhotonDistribution& d) {
  return order_profile(std::span<const double>(d.probs()), d.tail_bound(),
                       d.label());
}

namespace {

// Partial sum with the zero-padding convention: constant past the end.
double padded(const std::vector<double>& sums, std::size_t i) {
  return i < sums.size() ? sums[i] : sums.back();
}

}  // namespace

MajorizationVerdict compare(const OrderedProfile& a, const OrderedProfile& b,
                            double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) {
    throw std::domain_error("tolerance must be non-negative");
  }
  if (a.partial_sums.empty() || b.partial_sums.empty()) {
    throw std::domain_error("cannot compare empty profiles");
  }
  const double mass_gap =
      std::abs(a.partial_sums.back() - b.partial_sums.back());
  const double budget = a.tail_bound + b.tail_bound + 1e-11;
  if (mass_gap > budget) {
    throw std::domain_error(
        "profiles '" + a.source_label + "' and '" + b.source_label +
        "' are normalized differently (gap " + format_double(mass_gap) + ")");
  }

  const std::size_t len =
      std::max(a.partial_sums.size(), b.partial_sums.size());

  MajorizationVerdict verdict;
  verdict.tolerance = tol;

  bool a_above = false;
  bool b_above = false;
  // Last index where the difference exceeded tol, and its sign.
  int last_strict_index = -1;
  int last_strict_sign = 0;

  for (std::size_t i = 0; i < len; ++i) {
    const double d = padded(a.partial_sums, i) - padded(b.partial_sums, i);
    int sign = 0;
    if (d > tol) {
      sign = 1;
      a_above = true;
    } else if (d < -tol) {
      sign = -1;
      b_above = true;
    }
    if (sign != 0) {
      if (last_strict_sign != 0 && sign != last_strict_sign) {
        // Sign change between the two strict indices: interpolate the
        // crossing of the piecewise-linear partial-sum curves.
        const std::size_t lo = static_cast<std::size_t>(last_strict_index);
        const double d_lo =
            padded(a.partial_sums, lo) - padded(b.partial_sums, lo);
        const double x =
            static_cast<double>(lo) +
            static_cast<double>(i - lo) * d_lo / (d_lo - d);
        CrossingPoint cp;
        cp.n_interp = x;
        // Confidence level at which the interval ordering flips: the
        // strictly flipped ordering sets in for alpha just above the
        // smaller of the two partial sums at the first index past the
        // crossing.
        cp.alpha =
            std::min(padded(a.partial_sums, i), padded(b.partial_sums, i));
        cp.above_before =
            last_strict_sign > 0 ? ProfileSide::A : ProfileSide::B;
        verdict.crossings.push_back(cp);
      }
      last_strict_index = static_cast<int>(i);
      last_strict_sign = sign;
    }
  }

  if (a_above && b_above) {
    verdict.order = Order::Incomparable;
  } else if (a_above) {
    verdict.order = Order::Majorizes;
  } else if (b_above) {
    verdict.order = Order::MajorizedBy;
  } else {
    verdict.order = Order::Equal;
  }
  if (verdict.order != Order::Incomparable) {
    verdict.crossings.clear();
  }
  return verdict;
}

int confidence_interval(const OrderedProfile& p, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("confidence level must lie in (0, 1)");
  }
  const auto& sums = p.partial_sums;
  if (alpha > sums.back()) {
    throw std::domain_error(
        "confidence level " + format_double(alpha) +
        " exceeds the achievable mass of '" + p.source_label + "' by " +
        format_double(alpha - sums.back()));
  }
  const auto it = std::lower_bound(sums.begin(), sums.end(), alpha);
  return static_cast<int>(it - sums.begin());
}

EquivalenceReport equivalence_check(const OrderedProfile& a,
                                    const OrderedProfile& b,
                                    std::span<const double> alphas,
                                    double tol) {
  EquivalenceReport report;
  report.verdict = compare(a, b, tol);

  switch (report.verdict.order) {
    case Order::Majorizes:
      report.expected_b_larger = true;
      break;
    case Order::MajorizedBy:
      report.expected_b_larger = false;
      break;
    case Order::Equal:
      report.expected_b_larger = true;  // intervals must tie
      break;
    case Order::Incomparable:
      // Expect the pre-crossing leader to keep the smaller intervals;
      // violations then chart the far side of the first crossing.
      report.expected_b_larger =
          report.verdict.crossings.front().above_before == ProfileSide::A;
      break;
  }

  for (double alpha : alphas) {
    const int n_a = confidence_interval(a, alpha);
    const int n_b = confidence_interval(b, alpha);
    bool violated = false;
    if (report.verdict.order == Order::Equal) {
      violated = n_a != n_b;
    } else if (report.expected_b_larger) {
      violated = n_b < n_a;
    } else {
      violated = n_a < n_b;
    }
    if (violated) {
      report.violations.push_back(EquivalenceViolation{alpha, n_a, n_b});
    }
  }
  return report;
}

PoissonVerdict classify_poissonian(const PhotonDistribution& d, double tol,
                                   double eps) {
  PoissonVerdict verdict;
  verdict.mean = moments(d).mean;
  if (verdict.mean <= 1e-12) {
    // Vacuum: the same-mean Poisson reference degenerates to the vacuum
    // itself, so the comparison is trivially an equality.
    verdict.cls = PoissonClass::Poissonian;
    return verdict;
  }
  const PhotonDistribution reference = coherent_distribution(verdict.mean, eps);
  const MajorizationVerdict mv =
      compare(order_profile(d), order_profile(reference), tol);
  switch (mv.order) {
    case Order::Majorizes:
      verdict.cls = PoissonClass::OverPoissonian;
      break;
    case Order::MajorizedBy:
      verdict.cls = PoissonClass::UnderPoissonian;
      break;
    case Order::Equal:
      verdict.cls = PoissonClass::Poissonian;
      break;
    case Order::Incomparable:
      verdict.cls = PoissonClass::Incomparable;
      verdict.crossings = mv.crossings;
      break;
  }
  return verdict;
}

std::vector<double> alpha_grid_999() {
  std::vector<double> grid(999);
  const double lo = 0.01;
  const double hi = 0.999;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = lo + static_cast<double>(i) * (hi - lo) / 998.0;
  }
  return grid;
}

}  // namespace photonstat
