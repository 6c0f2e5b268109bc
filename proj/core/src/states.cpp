#include "photonstat/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "photonstat/errors.hpp"
#include "photonstat/fock.hpp"
#include "photonstat/numerics.hpp"

namespace photonstat {

namespace {

void require_mean(double mean) {
  require_finite(mean, "mean");
  if (mean <= 0.0) {
    throw std::domain_error("mean photon number must be positive");
  }
}

void require_eps(double eps) {
  require_finite(eps, "eps");
  if (eps <= 0.0 || eps >= 1.0) {
    throw std::domain_error("tail mass eps must lie in (0, 1)");
  }
}

// Initial truncation for a distribution with the given moments.
int initial_truncation(double mean, double variance) {
  return static_cast<int>(
      std::ceil(mean + 10.0 * std::sqrt(std::max(variance, 0.0)) + 20.0));
}

}  // namespace

double SqueezedParams::mean() const {
  const double s = std::sinh(squeezing);
  return displacement * displacement + s * s;
}

double SqueezedParams::variance() const {
  const double s2 = std::sinh(2.0 * squeezing);
  return displacement * displacement * std::exp(2.0 * squeezing) +
         0.5 * s2 * s2;
}

PhotonDistribution coherent_distribution(double mean, double eps) {
  require_mean(mean);
  require_eps(eps);

  const long double log_mean = std::log(static_cast<long double>(mean));
  int n_max = initial_truncation(mean, mean);

  // Past the truncation the term ratio mean/(n+1) is below one, so the
  // remainder is dominated by a geometric series starting at the first
  // omitted term.
  auto tail_bound_at = [&](int nm) {
    const LogFactorialTable lf(static_cast<std::size_t>(nm) + 1);
    const long double log_first = -static_cast<long double>(mean) +
                                  (nm + 1) * log_mean -
                                  lf(static_cast<std::size_t>(nm) + 1);
    const double ratio = mean / (nm + 2);
    return static_cast<double>(std::exp(log_first)) / (1.0 - ratio);
  };

  while (tail_bound_at(n_max) > eps) {
    n_max = n_max + n_max / 2 + 2;
  }

  const LogFactorialTable lf(static_cast<std::size_t>(n_max) + 1);
  std::vector<double> probs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const long double log_p = -static_cast<long double>(mean) +
                              n * log_mean - lf(static_cast<std::size_t>(n));
    probs[static_cast<std::size_t>(n)] =
        static_cast<double>(std::exp(log_p));
  }
  return PhotonDistribution(std::move(probs), tail_bound_at(n_max),
                            "coherent(" + format_double(mean) + ")");
}

PhotonDistribution thermal_distribution(double mean, double eps) {
  require_mean(mean);
  require_eps(eps);

  const double log_ratio = std::log(mean) - std::log(mean + 1.0);
  // The tail past N is exactly (mean/(mean+1))^{N+1}; pick the smallest N
  // that brings it at or below eps.
  int n_max = static_cast<int>(std::ceil(std::log(eps) / log_ratio)) - 1;
  while (static_cast<double>(n_max + 1) * log_ratio > std::log(eps)) ++n_max;
  n_max = std::max(n_max, 1);

  const long double log_ratio_l = std::log(static_cast<long double>(mean)) -
                                  std::log(static_cast<long double>(mean) + 1.0L);
  const long double log_p0 = -std::log(static_cast<long double>(mean) + 1.0L);
  std::vector<double> probs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    probs[static_cast<std::size_t>(n)] =
        static_cast<double>(std::exp(log_p0 + n * log_ratio_l));
  }
  const double tail = static_cast<double>(
      std::exp(static_cast<long double>(n_max + 1) * log_ratio_l));
  return PhotonDistribution(std::move(probs), tail,
                            "thermal(" + format_double(mean) + ")");
}

PhotonDistribution number_state_distribution(int n) {
  if (n < 0) {
    throw std::domain_error("photon number must be non-negative");
  }
  std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
  probs.back() = 1.0;
  return PhotonDistribution(std::move(probs), 0.0,
                            "number(" + std::to_string(n) + ")");
}

PhotonDistribution squeezed_distribution(const SqueezedParams& params,
                                         double eps) {
  require_finite(params.displacement, "displacement");
  require_finite(params.squeezing, "squeezing");
  require_eps(eps);

  const FockVector state = build_squeezed_state_auto(params, eps);
  // Small allowance on top of the norm deficit for the rounding of the
  // norm sum itself.
  const double tail = state.truncation_deficit() + 1e-15;
  return PhotonDistribution(state.photon_probabilities(), tail,
                            state.label());
}

namespace {

// Sign/log-magnitude state for the scaled Hermite recurrence at a purely
// imaginary argument i*y: H_n(i y) = i^n G_n(y) with G real and
// G_{n+1} = 2 y G_n + 2 n G_{n-1}. All terms share one sign for y != 0, so
// the recurrence is cancellation-free.
struct SignedLog {
  double log_abs;
  int sign;  // -1, 0, +1

  static SignedLog zero() {
    return {-std::numeric_limits<double>::infinity(), 0};
  }
  static SignedLog of(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  }
};

SignedLog hermite_step(double two_y, double two_n, const SignedLog& g_n,
                       const SignedLog& g_nm1) {
  if (g_n.sign == 0 && g_nm1.sign == 0) return SignedLog::zero();
  const double a =
      g_n.sign == 0 || two_y == 0.0
          ? -std::numeric_limits<double>::infinity()
          : g_n.log_abs + std::log(std::abs(two_y));
  const double b = g_nm1.sign == 0
                       ? -std::numeric_limits<double>::infinity()
                       : g_nm1.log_abs + std::log(two_n);
  const double m = std::max(a, b);
  if (!std::isfinite(m)) return SignedLog::zero();
  const double sa = g_n.sign * (two_y < 0.0 ? -1.0 : 1.0);
  double v = 0.0;
  if (std::isfinite(a)) v += sa * std::exp(a - m);
  if (std::isfinite(b)) v += g_nm1.sign * std::exp(b - m);
  if (v == 0.0) return SignedLog::zero();
  return {m + std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

}  // namespace

std::vector<double> squeezed_closed_form_prefix(const SqueezedParams& params,
                                                int count) {
  require_finite(params.displacement, "displacement");
  require_finite(params.squeezing, "squeezing");
  if (params.squeezing <= 0.0) {
    throw std::domain_error(
        "the closed form is valid for r > 0 only; use squeezed_distribution");
  }
  if (count < 1) {
    throw std::domain_error("count must be positive");
  }

  const double r = params.squeezing;
  const double big_r = params.displacement;
  const double t = std::tanh(r);
  const double y = (big_r / std::sqrt(2.0)) * (std::sqrt(t) - 1.0 / std::sqrt(t));
  const double log_t = std::log(t);
  const double log2 = std::log(2.0);
  const double base = -log_cosh(r) - big_r * big_r * (1.0 - t);

  std::vector<double> probs(static_cast<std::size_t>(count), 0.0);
  SignedLog g_prev = SignedLog::of(1.0);        // G_0
  SignedLog g_cur = SignedLog::of(2.0 * y);     // G_1
  double log_fact = 0.0;
  for (int n = 0; n < count; ++n) {
    const SignedLog& g = (n == 0) ? g_prev : g_cur;
    if (g.sign != 0) {
      const double lp =
          n * (log_t - log2) - log_fact + base + 2.0 * g.log_abs;
      probs[static_cast<std::size_t>(n)] = std::exp(lp);
    }
    // roll the recurrence and the factorial to n+1
    if (n >= 1) {
      const SignedLog next =
          hermite_step(2.0 * y, 2.0 * static_cast<double>(n), g_cur, g_prev);
      g_prev = g_cur;
      g_cur = next;
    }
    log_fact += std::log(static_cast<double>(n + 1));
  }
  return probs;
}

double squeezed_closed_form(const SqueezedParams& params, int n) {
  if (n < 0) {
    throw std::domain_error("photon number must be non-negative");
  }
  return squeezed_closed_form_prefix(params, n + 1).back();
}

double gaussian_partial_sum(double delta_n, double big_n) {
  require_finite(delta_n, "delta_n");
  if (delta_n <= 0.0) {
    throw std::domain_error("delta_n must be positive");
  }
  if (!(big_n >= 0.0)) {
    throw std::domain_error("N must be non-negative");
  }
  return std::erf(big_n / (std::sqrt(2.0) * delta_n));
}

double thermal_partial_sum_closed_form(double mean, long long big_n) {
  require_mean(mean);
  if (big_n < 0) {
    throw std::domain_error("N must be non-negative");
  }
  const double log_ratio = std::log(mean) - std::log(mean + 1.0);
  return -std::expm1(static_cast<double>(big_n + 1) * log_ratio);
}

PhotonDistribution mixture(const MixtureSpec& spec) {
  require_finite(spec.weight, "weight");
  if (spec.weight < 0.0 || spec.weight > 1.0) {
    throw std::domain_error("mixing weight must lie in [0, 1]");
  }
  const std::size_t len = std::max(spec.first.size(), spec.second.size());
  std::vector<double> probs(len, 0.0);
  for (std::size_t n = 0; n < len; ++n) {
    const double a = n < spec.first.size() ? spec.first.probs()[n] : 0.0;
    const double b = n < spec.second.size() ? spec.second.probs()[n] : 0.0;
    probs[n] = spec.weight * a + (1.0 - spec.weight) * b;
  }
  const double tail = spec.weight * spec.first.tail_bound() +
                      (1.0 - spec.weight) * spec.second.tail_bound();
  return PhotonDistribution(std::move(probs), tail,
                            "mix(" + format_double(spec.weight) + ";" +
                                spec.first.label() + ";" +
                                spec.second.label() + ")");
}

namespace {

// Photon-number variance at mean `mean` as a function of the squeezing r,
// with the displacement eliminated through R^2 = mean - sinh^2 r.
double variance_at(double mean, double r) {
  const double sh = std::sinh(r);
  const double s2 = std::sinh(2.0 * r);
  const double rr = std::max(mean - sh * sh, 0.0);
  return rr * std::exp(2.0 * r) + 0.5 * s2 * s2;
}

// Golden-section minimum of variance_at over [lo, hi].
double variance_minimizer(double mean, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = variance_at(mean, x1);
  double f2 = variance_at(mean, x2);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a));
       ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = variance_at(mean, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = variance_at(mean, x2);
    }
  }
  return 0.5 * (a + b);
}

// Bisection for variance_at(mean, r) == target on [lo, hi]; requires a
// sign change of the residual across the bracket.
double variance_root(double mean, double target, double lo, double hi) {
  double flo = variance_at(mean, lo) - target;
  double fhi = variance_at(mean, hi) - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    // Boundary rounding can leave a residual of one sign on both ends;
    // return the end with the smaller residual.
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = variance_at(mean, mid) - target;
    if (fm == 0.0 || (hi - lo) < 1e-16 * std::max(1.0, std::abs(mid))) {
      return mid;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SqueezedParams params_from_r(double mean, double r) {
  const double sh = std::sinh(r);
  const double rr = std::max(mean - sh * sh, 0.0);
  return SqueezedParams{std::sqrt(rr), r};
}

}  // namespace

VarianceRange attainable_variance_range(double mean) {
  require_mean(mean);
  const double r_max = std::asinh(std::sqrt(mean));
  const double r_min_loc = variance_minimizer(mean, -r_max, 0.0);
  return VarianceRange{variance_at(mean, r_min_loc),
                       2.0 * mean * (mean + 1.0)};
}

std::vector<SqueezedParams> solve_squeezed_params_all(double target_mean,
                                                      double target_variance) {
  require_mean(target_mean);
  require_finite(target_variance, "variance");
  if (target_variance <= 0.0) {
    throw std::domain_error("target variance must be positive");
  }

  const double mean = target_mean;
  const double r_max = std::asinh(std::sqrt(mean));
  const double v_max = 2.0 * mean * (mean + 1.0);
  const double r_star = variance_minimizer(mean, -r_max, 0.0);
  const double v_min = variance_at(mean, r_star);
  const double slack = 1e-9 * std::max(1.0, target_variance);

  if (target_variance > v_max + slack || target_variance < v_min - slack) {
    throw InfeasibleMomentsError(
        "no squeezed state has variance " + format_double(target_variance) +
            " at mean " + format_double(mean) + "; attainable range is [" +
            format_double(v_min) + ", " + format_double(v_max) + "]",
        v_min, v_max);
  }
  if (target_variance >= v_max - slack) {
    // Variance maximum: the squeezed vacuum, unique up to the sign of r
    // (which leaves the photon statistics unchanged).
    return {SqueezedParams{0.0, r_max}};
  }
  if (target_variance <= v_min + slack) {
    return {params_from_r(mean, r_star)};
  }

  std::vector<SqueezedParams> solutions;
  if (target_variance >= mean) {
    // Principal root with r >= 0 (variance grows monotonically there).
    const double v = std::min(target_variance, v_max);
    solutions.push_back(params_from_r(mean, variance_root(mean, v, 0.0, r_max)));
    // Far root on the descending negative branch, if distinct.
    if (target_variance < v_max - slack) {
      solutions.push_back(
          params_from_r(mean, variance_root(mean, v, -r_max, r_star)));
    }
  } else {
    // Sub-Poissonian targets: both roots have r < 0; the branch adjacent
    // to r = 0 gives the smaller |r|.
    const double v = std::max(target_variance, v_min);
    solutions.push_back(params_from_r(mean, variance_root(mean, v, r_star, 0.0)));
    const double far = variance_root(mean, v, -r_max, r_star);
    if (std::abs(far - solutions.front().squeezing) > 1e-10) {
      solutions.push_back(params_from_r(mean, far));
    }
  }
  return solutions;
}

SqueezedParams solve_squeezed_params(double target_mean,
                                     double target_variance) {
  require_mean(target_mean);
  require_finite(target_variance, "variance");
  if (target_variance == target_mean) {
    return SqueezedParams{std::sqrt(target_mean), 0.0};  // coherent limit
  }
  auto solutions = solve_squeezed_params_all(target_mean, target_variance);
  return solutions.back();
}

}  // namespace photonstat
