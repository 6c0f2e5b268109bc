#pragma once

// Small numeric helpers shared across the library: compensated summation
// and log-space factorials/binomials. Factorials are never formed in
// linear space; probabilities are exponentiated last.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace photonstat {

// Neumaier variant of Kahan summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// ln(n!) for n = 0..n_max. Stored in long double with compensated
// accumulation: the table entries reach ~2e4 for desk-scale n, and the
// log-space probability formulas cancel them against terms of the same
// magnitude, so double-precision tables would leak ~1e-12 of relative
// error into every probability.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(std::size_t n_max) : values_(n_max + 1, 0.0L) {
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const long double x = std::log(static_cast<long double>(n));
      const long double t = sum + x;
      if (std::abs(sum) >= std::abs(x)) {
        comp += (sum - t) + x;
      } else {
        comp += (x - t) + sum;
      }
      sum = t;
      values_[n] = sum + comp;
    }
  }

  long double operator()(std::size_t n) const { return values_[n]; }
  std::size_t max_n() const { return values_.size() - 1; }

 private:
  std::vector<long double> values_;
};

// ln C(n, k); requires k <= n <= table.max_n().
inline long double log_binomial(const LogFactorialTable& table, std::size_t n,
                                std::size_t k) {
  return table(n) - table(k) - table(n - k);
}

// ln(cosh x) without overflowing cosh for large |x|.
inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

inline void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}

// Locale-independent decimal form with 17 significant digits; round-trips
// to the same double. Used everywhere a float reaches an output file or a
// canonical label.
std::string format_double(double value);

}  // namespace photonstat
