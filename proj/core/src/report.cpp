#include "photonstat/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "photonstat/numerics.hpp"
#include "photonstat/version.hpp"

namespace photonstat {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* side_name(ProfileSide side) {
  return side == ProfileSide::A ? "a" : "b";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void csv_preamble(std::ostringstream& out, const char* kind) {
  out << "# tool=" << kToolName << "\n";
  out << "# version=" << kVersion << "\n";
  out << "# report=" << kind << "\n";
}

ordered_json json_preamble(const char* kind) {
  ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kVersion);
  j["report"] = kind;
  return j;
}

ordered_json crossings_json(const std::vector<CrossingPoint>& crossings) {
  ordered_json arr = ordered_json::array();
  for (const auto& cp : crossings) {
    ordered_json c;
    c["index"] = format_double(cp.n_interp);
    c["interval_size"] = format_double(cp.interval_size());
    c["alpha"] = format_double(cp.alpha);
    c["above_before"] = side_name(cp.above_before);
    arr.push_back(std::move(c));
  }
  return arr;
}

void crossings_csv(std::ostringstream& out,
                   const std::vector<CrossingPoint>& crossings) {
  out << "# table=crossings\n";
  out << "index,interval_size,alpha,above_before\n";
  for (const auto& cp : crossings) {
    out << format_double(cp.n_interp) << ','
        << format_double(cp.interval_size()) << ','
        << format_double(cp.alpha) << ',' << side_name(cp.above_before)
        << "\n";
  }
}

ordered_json sums_json(const std::vector<double>& sums) {
  ordered_json arr = ordered_json::array();
  for (double s : sums) arr.push_back(format_double(s));
  return arr;
}

void pad_to(std::vector<double>& sums, std::size_t len) {
  if (!sums.empty()) sums.resize(len, sums.back());
}

double effective_alpha(const std::vector<CrossingPoint>& crossings) {
  if (crossings.empty()) return 1.0;
  const auto first = std::min_element(
      crossings.begin(), crossings.end(),
      [](const auto& x, const auto& y) { return x.n_interp < y.n_interp; });
  return first->alpha;
}

}  // namespace

std::vector<double> report_alpha_grid() {
  std::vector<double> grid = alpha_grid_999();
  for (double highlighted : {0.80, 0.85, 0.9, 0.95, 0.995, 0.997}) {
    grid.push_back(highlighted);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

CompareReport run_compare(const StateSpec& a, const StateSpec& b, double tol,
                          double eps) {
  CompareReport report;
  report.spec_a = print_state_spec(a);
  report.spec_b = print_state_spec(b);
  report.eps = eps;
  report.tol = tol;

  const PhotonDistribution dist_a = build_distribution(a, eps);
  const PhotonDistribution dist_b = build_distribution(b, eps);
  const OrderedProfile profile_a = order_profile(dist_a);
  const OrderedProfile profile_b = order_profile(dist_b);

  report.verdict = compare(profile_a, profile_b, tol);
  report.moments_a = moments(dist_a);
  report.moments_b = moments(dist_b);
  report.sums_a = profile_a.partial_sums;
  report.sums_b = profile_b.partial_sums;
  const std::size_t len = std::max(report.sums_a.size(), report.sums_b.size());
  pad_to(report.sums_a, len);
  pad_to(report.sums_b, len);

  for (double alpha : report_alpha_grid()) {
    report.confidence.push_back(
        ConfidenceRow{alpha, confidence_interval(profile_a, alpha),
                      confidence_interval(profile_b, alpha)});
  }
  return report;
}

std::string render(const CompareReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "compare");
    out << "# spec_a=" << report.spec_a << "\n";
    out << "# spec_b=" << report.spec_b << "\n";
    out << "# eps=" << format_double(report.eps) << "\n";
    out << "# tol=" << format_double(report.tol) << "\n";
    out << "# verdict=" << to_string(report.verdict.order) << "\n";
    out << "# mean_a=" << format_double(report.moments_a.mean) << "\n";
    out << "# variance_a=" << format_double(report.moments_a.variance) << "\n";
    out << "# mean_b=" << format_double(report.moments_b.mean) << "\n";
    out << "# variance_b=" << format_double(report.moments_b.variance) << "\n";
    crossings_csv(out, report.verdict.crossings);
    out << "# table=partial_sums\n";
    out << "N," << csv_quote("S[" + report.spec_a + "]") << ','
        << csv_quote("S[" + report.spec_b + "]") << "\n";
    for (std::size_t n = 0; n < report.sums_a.size(); ++n) {
      out << n << ',' << format_double(report.sums_a[n]) << ','
          << format_double(report.sums_b[n]) << "\n";
    }
    out << "# table=confidence_intervals\n";
    out << "alpha,N_a,N_b\n";
    for (const auto& row : report.confidence) {
      out << format_double(row.alpha) << ',' << row.n_a << ',' << row.n_b
          << "\n";
    }
    return out.str();
  }

  ordered_json j = json_preamble("compare");
  j["spec_a"] = report.spec_a;
  j["spec_b"] = report.spec_b;
  j["eps"] = format_double(report.eps);
  j["tol"] = format_double(report.tol);
  j["verdict"] = to_string(report.verdict.order);
  j["crossings"] = crossings_json(report.verdict.crossings);
  j["moments_a"] = {{"mean", format_double(report.moments_a.mean)},
                    {"variance", format_double(report.moments_a.variance)}};
  j["moments_b"] = {{"mean", format_double(report.moments_b.mean)},
                    {"variance", format_double(report.moments_b.variance)}};
  j["partial_sums"] = {{"S_a", sums_json(report.sums_a)},
                       {"S_b", sums_json(report.sums_b)}};
  ordered_json conf = ordered_json::array();
  for (const auto& row : report.confidence) {
    conf.push_back({{"alpha", format_double(row.alpha)},
                    {"N_a", row.n_a},
                    {"N_b", row.n_b}});
  }
  j["confidence_intervals"] = std::move(conf);
  return j.dump(2) + "\n";
}

ClassifyReport run_classify(const StateSpec& spec, ClassifyCriterion criterion,
                            double tol, double eps) {
  ClassifyReport report;
  report.spec = print_state_spec(spec);
  report.criterion = criterion;
  report.eps = eps;
  report.tol = tol;

  const PhotonDistribution dist = build_distribution(spec, eps);
  const Moments m = moments(dist);
  report.mean = m.mean;
  report.variance = m.variance;
  report.variance_ratio = m.mean > 0.0 ? m.variance / m.mean : 0.0;

  if (criterion == ClassifyCriterion::Poisson) {
    const PoissonVerdict v = classify_poissonian(dist, tol, eps);
    report.verdict = to_string(v.cls);
    report.crossings = v.crossings;
  } else {
    const ClusterVerdict v = classify_clustering(dist, tol);
    report.verdict = to_string(v.cls);
    report.crossings = v.crossings;
    report.has_covariance = true;
    report.covariance = v.covariance;
  }
  report.effective_up_to_alpha = effective_alpha(report.crossings);
  return report;
}

std::string render(const ClassifyReport& report, OutputFormat format) {
  const char* criterion_name =
      report.criterion == ClassifyCriterion::Poisson ? "poisson" : "clustering";
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "classify");
    out << "# spec=" << report.spec << "\n";
    out << "# criterion=" << criterion_name << "\n";
    out << "# eps=" << format_double(report.eps) << "\n";
    out << "# tol=" << format_double(report.tol) << "\n";
    out << "# verdict=" << report.verdict << "\n";
    out << "# mean=" << format_double(report.mean) << "\n";
    out << "# variance=" << format_double(report.variance) << "\n";
    out << "# variance_ratio=" << format_double(report.variance_ratio) << "\n";
    if (report.has_covariance) {
      out << "# covariance=" << format_double(report.covariance) << "\n";
    }
    out << "# effective_up_to_alpha="
        << format_double(report.effective_up_to_alpha) << "\n";
    crossings_csv(out, report.crossings);
    return out.str();
  }

  ordered_json j = json_preamble("classify");
  j["spec"] = report.spec;
  j["criterion"] = criterion_name;
  j["eps"] = format_double(report.eps);
  j["tol"] = format_double(report.tol);
  j["verdict"] = report.verdict;
  j["mean"] = format_double(report.mean);
  j["variance"] = format_double(report.variance);
  j["variance_ratio"] = format_double(report.variance_ratio);
  if (report.has_covariance) {
    j["covariance"] = format_double(report.covariance);
  }
  j["effective_up_to_alpha"] = format_double(report.effective_up_to_alpha);
  j["crossings"] = crossings_json(report.crossings);
  return j.dump(2) + "\n";
}

std::vector<int> known_figure_ids() { return {2, 3, 4, 5, 7, 8, 9, 10, 11}; }

std::string figure_description(int id) {
  switch (id) {
    case 2:
      return "ordered partial sums for coherent states with mean 1, 5, 10";
    case 3:
      return "ordered partial sums for coherent and thermal light, mean 1.5";
    case 4:
      return "ordered partial sums for coherent mean 100 and thermal mean 10";
    case 5:
      return "ordered partial sums at mean 6: squeezed with variance 3.6, "
             "coherent, and squeezed vacuum with variance 84";
    case 7:
      return "number-sum and number-difference ordered sums for a coherent "
             "state with mean 1";
    case 8:
      return "ordered partial sums for a squeezed state with mean 6, "
             "variance 12 and coherent light of the same mean";
    case 9:
      return "number-sum and number-difference ordered sums for the "
             "squeezed state with mean 6, variance 12";
    case 10:
      return "ordered partial sums for the one-photon/thermal mixture "
             "(weight 0.9, thermal mean 11) and coherent light of mean 2";
    case 11:
      return "number-sum and number-difference ordered sums for the "
             "one-photon/thermal mixture";
    default:
      break;
  }
  throw std::invalid_argument("unknown figure id " + std::to_string(id) +
                              "; valid ids: 2, 3, 4, 5, 7, 8, 9, 10, 11");
}

namespace {

void append_profile_params(FigureData& figure, const std::string& label,
                           const PhotonDistribution& dist) {
  const Moments m = moments(dist);
  figure.params.emplace_back("mean[" + label + "]", format_double(m.mean));
  figure.params.emplace_back("variance[" + label + "]",
                             format_double(m.variance));
}

void add_photon_curve(FigureData& figure, const std::string& spec_text,
                      double eps) {
  const StateSpec spec = parse_state_spec(spec_text);
  const PhotonDistribution dist = build_distribution(spec, eps);
  const OrderedProfile profile = order_profile(dist);
  figure.curves.push_back(FigureCurve{"S[" + spec_text + "]",
                                      profile.partial_sums});
  append_profile_params(figure, spec_text, dist);
  if (const auto* target = std::get_if<SqueezedTargetSpec>(&spec.node)) {
    const SqueezedParams params =
        solve_squeezed_params(target->mean, target->variance);
    figure.params.emplace_back("params[" + spec_text + "]",
                               "R=" + format_double(params.displacement) +
                                   ",r=" + format_double(params.squeezing));
  }
}

void add_pm_curves(FigureData& figure, const std::string& spec_text,
                   double eps) {
  const StateSpec spec = parse_state_spec(spec_text);
  const PhotonDistribution dist = build_distribution(spec, eps);
  const PhotonDistribution sum = number_sum_distribution(dist);
  const SignedCountDistribution diff = number_difference_distribution(dist);
  figure.curves.push_back(
      FigureCurve{"S[sum[" + spec_text + "]]",
                  order_profile(sum).partial_sums});
  figure.curves.push_back(
      FigureCurve{"S[difference[" + spec_text + "]]",
                  order_profile(diff).partial_sums});
  append_profile_params(figure, spec_text, dist);
  if (const auto* target = std::get_if<SqueezedTargetSpec>(&spec.node)) {
    const SqueezedParams params =
        solve_squeezed_params(target->mean, target->variance);
    figure.params.emplace_back("params[" + spec_text + "]",
                               "R=" + format_double(params.displacement) +
                                   ",r=" + format_double(params.squeezing));
  }
}

}  // namespace

FigureData run_figure(int id, double eps) {
  FigureData figure;
  figure.id = id;
  figure.description = figure_description(id);
  figure.params.emplace_back("eps", format_double(eps));

  switch (id) {
    case 2:
      add_photon_curve(figure, "coherent(1)", eps);
      add_photon_curve(figure, "coherent(5)", eps);
      add_photon_curve(figure, "coherent(10)", eps);
      break;
    case 3:
      add_photon_curve(figure, "coherent(1.5)", eps);
      add_photon_curve(figure, "thermal(1.5)", eps);
      break;
    case 4:
      add_photon_curve(figure, "coherent(100)", eps);
      add_photon_curve(figure, "thermal(10)", eps);
      break;
    case 5:
      add_photon_curve(figure, "squeezed_target(mean=6,var=3.6)", eps);
      add_photon_curve(figure, "coherent(6)", eps);
      add_photon_curve(figure, "squeezed_target(mean=6,var=84)", eps);
      break;
    case 7:
      add_pm_curves(figure, "coherent(1)", eps);
      break;
    case 8:
      add_photon_curve(figure, "squeezed_target(mean=6,var=12)", eps);
      add_photon_curve(figure, "coherent(6)", eps);
      break;
    case 9:
      add_pm_curves(figure, "squeezed_target(mean=6,var=12)", eps);
      break;
    case 10:
      add_photon_curve(figure, "mix(0.9;number(1);thermal(11))", eps);
      add_photon_curve(figure, "coherent(2)", eps);
      break;
    case 11:
      add_pm_curves(figure, "mix(0.9;number(1);thermal(11))", eps);
      break;
    default:
      throw std::invalid_argument("unknown figure id " + std::to_string(id));
  }

  std::size_t len = 0;
  for (const auto& curve : figure.curves) {
    len = std::max(len, curve.partial_sums.size());
  }
  for (auto& curve : figure.curves) {
    pad_to(curve.partial_sums, len);
  }
  return figure;
}

std::string render(const FigureData& figure, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "figure");
    out << "# figure=" << figure.id << "\n";
    out << "# description=" << figure.description << "\n";
    for (const auto& [key, value] : figure.params) {
      out << "# param " << key << '=' << value << "\n";
    }
    out << "N";
    for (const auto& curve : figure.curves) {
      out << ',' << csv_quote(curve.label);
    }
    out << "\n";
    const std::size_t len =
        figure.curves.empty() ? 0 : figure.curves.front().partial_sums.size();
    for (std::size_t n = 0; n < len; ++n) {
      out << n;
      for (const auto& curve : figure.curves) {
        out << ',' << format_double(curve.partial_sums[n]);
      }
      out << "\n";
    }
    return out.str();
  }

  ordered_json j = json_preamble("figure");
  j["figure"] = figure.id;
  j["description"] = figure.description;
  ordered_json params;
  for (const auto& [key, value] : figure.params) params[key] = value;
  j["params"] = std::move(params);
  ordered_json curves = ordered_json::array();
  for (const auto& curve : figure.curves) {
    curves.push_back({{"label", curve.label},
                      {"partial_sums", sums_json(curve.partial_sums)}});
  }
  j["curves"] = std::move(curves);
  return j.dump(2) + "\n";
}

DistReport run_dist(const StateSpec& spec, double eps) {
  DistReport report;
  report.spec = print_state_spec(spec);
  report.eps = eps;
  const PhotonDistribution dist = build_distribution(spec, eps);
  report.m = moments(dist);
  report.tail_bound = dist.tail_bound();
  report.probs = dist.probs();
  return report;
}

std::string render(const DistReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "dist");
    out << "# spec=" << report.spec << "\n";
    out << "# eps=" << format_double(report.eps) << "\n";
    out << "# mean=" << format_double(report.m.mean) << "\n";
    out << "# variance=" << format_double(report.m.variance) << "\n";
    out << "# tail_bound=" << format_double(report.tail_bound) << "\n";
    out << "# n_max=" << (report.probs.size() - 1) << "\n";
    out << "n,p\n";
    for (std::size_t n = 0; n < report.probs.size(); ++n) {
      out << n << ',' << format_double(report.probs[n]) << "\n";
    }
    return out.str();
  }

  ordered_json j = json_preamble("dist");
  j["spec"] = report.spec;
  j["eps"] = format_double(report.eps);
  j["mean"] = format_double(report.m.mean);
  j["variance"] = format_double(report.m.variance);
  j["tail_bound"] = format_double(report.tail_bound);
  j["n_max"] = report.probs.size() - 1;
  j["probs"] = sums_json(report.probs);
  return j.dump(2) + "\n";
}

EntropyReport run_entropy(const StateSpec& spec,
                          const std::vector<EntropyFamily>& families,
                          const std::vector<double>& qs, bool bits,
                          double eps) {
  EntropyReport report;
  report.spec = print_state_spec(spec);
  report.eps = eps;
  report.bits = bits;
  const PhotonDistribution dist = build_distribution(spec, eps);
  const double unit = bits ? std::log(2.0) : 1.0;
  for (EntropyFamily family : families) {
    if (family == EntropyFamily::Shannon) {
      report.rows.push_back(EntropyRow{
          family, 1.0, entropy(dist, EntropyQuery{family, 1.0}) / unit});
      continue;
    }
    for (double q : qs) {
      report.rows.push_back(EntropyRow{
          family, q, entropy(dist, EntropyQuery{family, q}) / unit});
    }
  }
  return report;
}

std::string render(const EntropyReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "entropy");
    out << "# spec=" << report.spec << "\n";
    out << "# eps=" << format_double(report.eps) << "\n";
    out << "# unit=" << (report.bits ? "bits" : "nats") << "\n";
    out << "family,q,value\n";
    for (const auto& row : report.rows) {
      out << to_string(row.family) << ',' << format_double(row.q) << ','
          << format_double(row.value) << "\n";
    }
    return out.str();
  }

  ordered_json j = json_preamble("entropy");
  j["spec"] = report.spec;
  j["eps"] = format_double(report.eps);
  j["unit"] = report.bits ? "bits" : "nats";
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"family", to_string(row.family)},
                    {"q", format_double(row.q)},
                    {"value", format_double(row.value)}});
  }
  j["values"] = std::move(rows);
  return j.dump(2) + "\n";
}

SampleRunReport run_sample(const StateSpec& spec, std::uint64_t n_samples,
                           std::uint64_t seed, double eps) {
  SampleRunReport report;
  report.spec = print_state_spec(spec);
  report.eps = eps;
  report.samples =
      sample_beam_splitter(build_distribution(spec, eps), n_samples, seed);
  return report;
}

std::string render(const SampleRunReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    csv_preamble(out, "sample");
    out << "# spec=" << report.spec << "\n";
    out << "# eps=" << format_double(report.eps) << "\n";
    out << "# n_samples=" << report.samples.n_samples << "\n";
    out << "# seed=" << report.samples.seed << "\n";
    out << "n1,n2,count\n";
    for (const auto& [pair, count] : report.samples.joint_counts) {
      out << pair.first << ',' << pair.second << ',' << count << "\n";
    }
    return out.str();
  }

  ordered_json j = json_preamble("sample");
  j["spec"] = report.spec;
  j["eps"] = format_double(report.eps);
  j["n_samples"] = report.samples.n_samples;
  j["seed"] = report.samples.seed;
  ordered_json counts = ordered_json::array();
  for (const auto& [pair, count] : report.samples.joint_counts) {
    counts.push_back({{"n1", pair.first}, {"n2", pair.second},
                      {"count", count}});
  }
  j["joint_counts"] = std::move(counts);
  return j.dump(2) + "\n";
}

}  // namespace photonstat
