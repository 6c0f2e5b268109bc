#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "photonstat/numerics.hpp"

using namespace photonstat;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("neumaier summation compensates cancellation") {
  NeumaierSum sum;
  sum.add(1.0);
  for (int i = 0; i < 10; ++i) sum.add(1e-16);
  CHECK(sum.value() == doctest::Approx(1.0 + 1e-15).epsilon(1e-15));

  NeumaierSum tenths;
  for (int i = 0; i < 10; ++i) tenths.add(0.1);
  CHECK(std::abs(tenths.value() - 1.0) < 1e-15);
}

TEST_CASE("log factorial table matches exact factorials") {
  const LogFactorialTable lf(25);
  CHECK(static_cast<double>(lf(0)) == 0.0);
  CHECK(static_cast<double>(lf(1)) == 0.0);
  CHECK(static_cast<double>(lf(5)) ==
        doctest::Approx(std::log(120.0)).epsilon(1e-15));
  CHECK(static_cast<double>(lf(12)) ==
        doctest::Approx(std::log(479001600.0)).epsilon(1e-15));
  // 20! = 2432902008176640000
  CHECK(static_cast<double>(lf(20)) ==
        doctest::Approx(std::log(2432902008176640000.0)).epsilon(1e-15));
}

TEST_CASE("log binomial") {
  const LogFactorialTable lf(12);
  CHECK(static_cast<double>(log_binomial(lf, 10, 3)) ==
        doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(static_cast<double>(log_binomial(lf, 12, 0)) == doctest::Approx(0.0));
  CHECK(static_cast<double>(log_binomial(lf, 12, 12)) == doctest::Approx(0.0));
}

TEST_CASE("log cosh avoids overflow") {
  CHECK(log_cosh(0.0) == doctest::Approx(0.0));
  CHECK(log_cosh(2.0) == doctest::Approx(std::log(std::cosh(2.0))).epsilon(1e-15));
  CHECK(log_cosh(-2.0) == doctest::Approx(log_cosh(2.0)));
  // cosh(800) overflows double; log cosh must not.
  CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.5, 1e-12, 0.36787944117144233, 2.0 / 3.0, -42.25,
                   0.999, 1e300, 5e-324}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(0.0) == "0");
}

TEST_SUITE_END();
