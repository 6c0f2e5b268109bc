#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "photonstat/state_spec.hpp"

using namespace photonstat;

namespace {

StateSpec random_spec(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> family(0, depth > 0 ? 5 : 4);
  std::uniform_real_distribution<double> mean(0.1, 20.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> photon(0, 12);
  switch (family(rng)) {
    case 0: return StateSpec{CoherentSpec{mean(rng)}};
    case 1: return StateSpec{ThermalSpec{mean(rng)}};
    case 2: return StateSpec{NumberSpec{photon(rng)}};
    case 3: return StateSpec{SqueezedSpec{unit(rng) * 3.0, unit(rng) * 2.0 - 1.0}};
    case 4: return StateSpec{SqueezedTargetSpec{mean(rng), mean(rng)}};
    default: {
      MixSpec mix{unit(rng), {}};
      mix.parts.push_back(random_spec(rng, depth - 1));
      mix.parts.push_back(random_spec(rng, depth - 1));
      return StateSpec{std::move(mix)};
    }
  }
}

std::size_t offset_of(const char* text) {
  try {
    parse_state_spec(text);
  } catch (const SpecParseError& e) {
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_SUITE_BEGIN("state_spec");

TEST_CASE("parses every family") {
  const auto coherent = parse_state_spec("coherent(1.5)");
  CHECK(std::get<CoherentSpec>(coherent.node).mean == 1.5);

  const auto thermal = parse_state_spec("thermal(11)");
  CHECK(std::get<ThermalSpec>(thermal.node).mean == 11.0);

  const auto number = parse_state_spec("number(7)");
  CHECK(std::get<NumberSpec>(number.node).n == 7);

  const auto squeezed = parse_state_spec("squeezed(R=2.5,r=-0.75)");
  CHECK(std::get<SqueezedSpec>(squeezed.node).displacement == 2.5);
  CHECK(std::get<SqueezedSpec>(squeezed.node).squeezing == -0.75);

  const auto target = parse_state_spec("squeezed_target(mean=6,var=3.6)");
  CHECK(std::get<SqueezedTargetSpec>(target.node).mean == 6.0);
  CHECK(std::get<SqueezedTargetSpec>(target.node).variance == 3.6);

  const auto mix = parse_state_spec("mix(0.9;number(1);thermal(11))");
  const auto& m = std::get<MixSpec>(mix.node);
  CHECK(m.weight == 0.9);
  REQUIRE(m.parts.size() == 2);
  CHECK(std::get<NumberSpec>(m.parts[0].node).n == 1);
  CHECK(std::get<ThermalSpec>(m.parts[1].node).mean == 11.0);
}

TEST_CASE("nested mixtures and whitespace") {
  const auto spec =
      parse_state_spec(" mix( 0.5 ; mix(0.25;number(0);coherent(2)) ; "
                       "thermal(3) ) ");
  const auto& outer = std::get<MixSpec>(spec.node);
  CHECK(std::get<MixSpec>(outer.parts[0].node).weight == 0.25);
}

TEST_CASE("distinct diagnostics with byte offsets") {
  // Unknown family, at the start of the name.
  CHECK_THROWS_WITH_AS(parse_state_spec("bogus(1)"),
                       doctest::Contains("unknown state family"),
                       SpecParseError);
  CHECK(offset_of("bogus(1)") == 0);
  CHECK(offset_of("mix(0.5;number(1);bogus(1))") == 18);

  // Arity mismatch.
  CHECK_THROWS_WITH_AS(parse_state_spec("coherent(1,2)"),
                       doctest::Contains("too many arguments"), SpecParseError);

  // Mixing weight out of range.
  CHECK_THROWS_WITH_AS(parse_state_spec("mix(1.5;number(1);thermal(1))"),
                       doctest::Contains("[0, 1]"), SpecParseError);
  CHECK(offset_of("mix(1.5;number(1);thermal(1))") == 4);

  // Malformed numbers.
  CHECK_THROWS_WITH_AS(parse_state_spec("coherent(abc)"),
                       doctest::Contains("malformed number"), SpecParseError);
  CHECK(offset_of("coherent(abc)") == 9);
  CHECK_THROWS_AS(parse_state_spec("coherent(inf)"), SpecParseError);
  CHECK_THROWS_AS(parse_state_spec("number(-3)"), SpecParseError);
  CHECK_THROWS_AS(parse_state_spec("number(2.5)"), SpecParseError);

  // Structure errors.
  CHECK_THROWS_AS(parse_state_spec("coherent(1"), SpecParseError);
  CHECK_THROWS_AS(parse_state_spec("coherent(1)x"), SpecParseError);
  CHECK(offset_of("coherent(1)x") == 11);
  CHECK_THROWS_AS(parse_state_spec("squeezed(R=1,q=2)"), SpecParseError);
  CHECK_THROWS_AS(parse_state_spec("squeezed(r=1,R=2)"), SpecParseError);
  CHECK_THROWS_AS(parse_state_spec(""), SpecParseError);
}

TEST_CASE("canonical print round-trips") {
  const char* examples[] = {
      "coherent(1.5)",
      "thermal(11)",
      "number(0)",
      "squeezed(R=2.5,r=-0.75)",
      "squeezed_target(mean=6,var=3.6)",
      "mix(0.9;number(1);thermal(11))",
      "mix(0.5;mix(0.25;number(0);coherent(2));thermal(3))",
  };
  for (const char* text : examples) {
    const auto spec = parse_state_spec(text);
    const std::string printed = print_state_spec(spec);
    CHECK(parse_state_spec(printed) == spec);
    // Printing is idempotent even when 17-digit floats lengthen the text.
    CHECK(print_state_spec(parse_state_spec(printed)) == printed);
  }
}

TEST_CASE("round trip on random spec trees") {
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    const StateSpec spec = random_spec(rng, 2);
    const std::string printed = print_state_spec(spec);
    CAPTURE(printed);
    REQUIRE(parse_state_spec(printed) == spec);
  }
}

TEST_CASE("build_distribution dispatches to the state families") {
  CHECK(build_distribution(parse_state_spec("number(2)")).probs().back() == 1.0);
  CHECK(build_distribution(parse_state_spec("coherent(1)")).probs()[0] ==
        doctest::Approx(std::exp(-1.0)));
  CHECK(build_distribution(parse_state_spec("thermal(1)")).probs()[0] == 0.5);

  const auto mixed =
      build_distribution(parse_state_spec("mix(0.9;number(1);thermal(11))"));
  CHECK(mixed.probs()[1] ==
        doctest::Approx(0.9 + 0.1 * (1.0 / 12.0) * (11.0 / 12.0)).epsilon(1e-13));

  // squeezed and squeezed_target agree when fed the solved parameters.
  const auto direct =
      build_distribution(parse_state_spec("squeezed(R=0,r=1.6283069774322998)"));
  const auto target =
      build_distribution(parse_state_spec("squeezed_target(mean=6,var=84)"));
  REQUIRE(direct.size() == target.size());
  for (std::size_t n = 0; n < direct.size(); ++n) {
    REQUIRE(direct.probs()[n] ==
            doctest::Approx(target.probs()[n]).epsilon(1e-9).scale(1e-9));
  }
}

TEST_SUITE_END();
