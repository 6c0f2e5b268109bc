#include "photonstat/state_spec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

#include "photonstat/numerics.hpp"

namespace photonstat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  StateSpec parse_toplevel() {
    StateSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SpecParseError("unexpected trailing characters", pos_);
    }
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) {
      if (c == ')' && (peek() == ',' || peek() == ';')) {
        throw SpecParseError(std::string("too many arguments for ") + what,
                             pos_);
      }
      throw SpecParseError(std::string("expected '") + c + "' in " + what,
                           pos_);
    }
    ++pos_;
  }

  // Case-sensitive: R and r are different parameters.
  void expect_key(std::string_view key) {
    skip_ws();
    if (text_.substr(pos_, key.size()) != key) {
      throw SpecParseError("expected '" + std::string(key) + "'", pos_);
    }
    pos_ += key.size();
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      throw SpecParseError("expected a state family name", start);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  double parse_double() {
    skip_ws();
    const std::size_t start = pos_;
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (res.ec != std::errc()) {
      throw SpecParseError("malformed number", start);
    }
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    if (!std::isfinite(value)) {
      throw SpecParseError("number must be finite", start);
    }
    return value;
  }

  int parse_nonneg_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-') {
      throw SpecParseError("photon number must be a non-negative integer",
                           start);
    }
    int value = 0;
    const auto res = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (res.ec != std::errc()) {
      throw SpecParseError("malformed integer", start);
    }
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return value;
  }

  StateSpec parse_spec() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string family = parse_ident();

    if (family == "coherent" || family == "thermal") {
      expect('(', family.c_str());
      const double mean = parse_double();
      expect(')', family.c_str());
      if (family == "coherent") return StateSpec{CoherentSpec{mean}};
      return StateSpec{ThermalSpec{mean}};
    }
    if (family == "number") {
      expect('(', "number");
      const int n = parse_nonneg_int();
      expect(')', "number");
      return StateSpec{NumberSpec{n}};
    }
    if (family == "squeezed") {
      expect('(', "squeezed");
      expect_key("R");
      expect('=', "squeezed");
      const double displacement = parse_double();
      expect(',', "squeezed");
      expect_key("r");
      expect('=', "squeezed");
      const double squeezing = parse_double();
      expect(')', "squeezed");
      return StateSpec{SqueezedSpec{displacement, squeezing}};
    }
    if (family == "squeezed_target") {
      expect('(', "squeezed_target");
      expect_key("mean");
      expect('=', "squeezed_target");
      const double mean = parse_double();
      expect(',', "squeezed_target");
      expect_key("var");
      expect('=', "squeezed_target");
      const double variance = parse_double();
      expect(')', "squeezed_target");
      return StateSpec{SqueezedTargetSpec{mean, variance}};
    }
    if (family == "mix") {
      expect('(', "mix");
      skip_ws();
      const std::size_t weight_at = pos_;
      const double weight = parse_double();
      if (weight < 0.0 || weight > 1.0) {
        throw SpecParseError("mixing weight must lie in [0, 1]", weight_at);
      }
      expect(';', "mix");
      StateSpec first = parse_spec();
      expect(';', "mix");
      StateSpec second = parse_spec();
      expect(')', "mix");
      MixSpec mix{weight, {}};
      mix.parts.push_back(std::move(first));
      mix.parts.push_back(std::move(second));
      return StateSpec{std::move(mix)};
    }
    throw SpecParseError("unknown state family '" + family + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Printer {
  std::string operator()(const CoherentSpec& s) const {
    return "coherent(" + format_double(s.mean) + ")";
  }
  std::string operator()(const ThermalSpec& s) const {
    return "thermal(" + format_double(s.mean) + ")";
  }
  std::string operator()(const NumberSpec& s) const {
    return "number(" + std::to_string(s.n) + ")";
  }
  std::string operator()(const SqueezedSpec& s) const {
    return "squeezed(R=" + format_double(s.displacement) +
           ",r=" + format_double(s.squeezing) + ")";
  }
  std::string operator()(const SqueezedTargetSpec& s) const {
    return "squeezed_target(mean=" + format_double(s.mean) +
           ",var=" + format_double(s.variance) + ")";
  }
  std::string operator()(const MixSpec& s) const {
    return "mix(" + format_double(s.weight) + ";" +
           print_state_spec(s.parts[0]) + ";" + print_state_spec(s.parts[1]) +
           ")";
  }
};

struct Builder {
  double eps;

  PhotonDistribution operator()(const CoherentSpec& s) const {
    return coherent_distribution(s.mean, eps);
  }
  PhotonDistribution operator()(const ThermalSpec& s) const {
    return thermal_distribution(s.mean, eps);
  }
  PhotonDistribution operator()(const NumberSpec& s) const {
    return number_state_distribution(s.n);
  }
  PhotonDistribution operator()(const SqueezedSpec& s) const {
    return squeezed_distribution(SqueezedParams{s.displacement, s.squeezing},
                                 eps);
  }
  PhotonDistribution operator()(const SqueezedTargetSpec& s) const {
    const SqueezedParams params = solve_squeezed_params(s.mean, s.variance);
    return squeezed_distribution(params, eps);
  }
  PhotonDistribution operator()(const MixSpec& s) const {
    return mixture(MixtureSpec{s.weight, build_distribution(s.parts[0], eps),
                               build_distribution(s.parts[1], eps)});
  }
};

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  return Parser(text).parse_toplevel();
}

std::string print_state_spec(const StateSpec& spec) {
  return std::visit(Printer{}, spec.node);
}

PhotonDistribution build_distribution(const StateSpec& spec, double eps) {
  return std::visit(Builder{eps}, spec.node);
}

}  // namespace photonstat
