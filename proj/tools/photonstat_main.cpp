// photonstat: compare, classify, and export photon-number statistics.
//
// Exit codes: 0 success, 2 usage or parse error, 3 numeric convergence
// failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photonstat/errors.hpp"
#include "photonstat/report.hpp"
#include "photonstat/state_spec.hpp"
#include "photonstat/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

struct CommonOptions {
  double eps = photonstat::kDefaultEps;
  double tol = photonstat::kDefaultTol;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_tol) {
  cmd->add_option("--eps", opts.eps,
                  "certified tail mass for truncated constructions");
  if (with_tol) {
    cmd->add_option("--tol", opts.tol,
                    "tolerance for treating partial sums as equal");
  }
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path,
                  "output file (stdout when omitted)");
}

photonstat::OutputFormat parse_format(const std::string& format) {
  return format == "json" ? photonstat::OutputFormat::Json
                          : photonstat::OutputFormat::Csv;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  }
  out << text;
}

std::string figure_help() {
  std::string help = "figure preset id; known presets:\n";
  for (int id : photonstat::known_figure_ids()) {
    help += "  " + std::to_string(id) + ": " +
            photonstat::figure_description(id) + "\n";
  }
  return help;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majorization analysis of photon-number statistics"};
  app.set_version_flag("--cli-version", std::string(photonstat::kVersion));
  app.require_subcommand(1);

  std::string spec_a;
  std::string spec_b;
  std::string criterion = "poisson";
  std::vector<double> entropy_qs = {0.25, 0.5, 2.0, 5.0};
  std::string entropy_family = "all";
  bool entropy_bits = false;
  int figure_id = 0;
  std::uint64_t n_samples = 1000000;
  std::uint64_t seed = 0;

  CommonOptions dist_opts;
  auto* dist_cmd =
      app.add_subcommand("dist", "emit a photon-number distribution");
  dist_cmd->add_option("spec", spec_a, "state specification")->required();
  add_common(dist_cmd, dist_opts, false);

  CommonOptions compare_opts;
  auto* compare_cmd = app.add_subcommand(
      "compare", "majorization comparison of two states");
  compare_cmd->add_option("spec_a", spec_a, "first state")->required();
  compare_cmd->add_option("spec_b", spec_b, "second state")->required();
  add_common(compare_cmd, compare_opts, true);

  CommonOptions classify_opts;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Poissonian or clustering classification of a state");
  classify_cmd->add_option("spec", spec_a, "state specification")->required();
  classify_cmd->add_option("--criterion", criterion, "classification to run")
      ->check(CLI::IsMember({"poisson", "clustering"}));
  add_common(classify_cmd, classify_opts, true);

  CommonOptions entropy_opts;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "Renyi/Tsallis/Shannon entropies");
  entropy_cmd->add_option("spec", spec_a, "state specification")->required();
  entropy_cmd->add_option("--q", entropy_qs, "entropic indices");
  entropy_cmd->add_option("--family", entropy_family, "entropy family")
      ->check(CLI::IsMember({"renyi", "tsallis", "shannon", "all"}));
  entropy_cmd->add_flag("--bits", entropy_bits,
                        "display entropies in bits instead of nats");
  add_common(entropy_cmd, entropy_opts, false);

  CommonOptions figure_opts;
  auto* figure_cmd =
      app.add_subcommand("figure", "emit data for a figure preset");
  figure_cmd->add_option("id", figure_id, figure_help())->required();
  add_common(figure_cmd, figure_opts, false);

  CommonOptions sample_opts;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Monte-Carlo beam-splitter detector counts");
  sample_cmd->add_option("spec", spec_a, "state specification")->required();
  sample_cmd->add_option("--n", n_samples, "number of samples");
  sample_cmd->add_option("--seed", seed, "RNG seed (recorded in the output)");
  add_common(sample_cmd, sample_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    using photonstat::parse_state_spec;

    if (dist_cmd->parsed()) {
      const auto report = photonstat::run_dist(parse_state_spec(spec_a),
                                               dist_opts.eps);
      emit(render(report, parse_format(dist_opts.format)), dist_opts.out_path);
    } else if (compare_cmd->parsed()) {
      const auto report =
          photonstat::run_compare(parse_state_spec(spec_a),
                                  parse_state_spec(spec_b), compare_opts.tol,
                                  compare_opts.eps);
      emit(render(report, parse_format(compare_opts.format)),
           compare_opts.out_path);
    } else if (classify_cmd->parsed()) {
      const auto which = criterion == "clustering"
                             ? photonstat::ClassifyCriterion::Clustering
                             : photonstat::ClassifyCriterion::Poisson;
      const auto report = photonstat::run_classify(
          parse_state_spec(spec_a), which, classify_opts.tol,
          classify_opts.eps);
      emit(render(report, parse_format(classify_opts.format)),
           classify_opts.out_path);
    } else if (entropy_cmd->parsed()) {
      std::vector<photonstat::EntropyFamily> families;
      if (entropy_family == "all") {
        families = {photonstat::EntropyFamily::Renyi,
                    photonstat::EntropyFamily::Tsallis,
                    photonstat::EntropyFamily::Shannon};
      } else if (entropy_family == "renyi") {
        families = {photonstat::EntropyFamily::Renyi};
      } else if (entropy_family == "tsallis") {
        families = {photonstat::EntropyFamily::Tsallis};
      } else {
        families = {photonstat::EntropyFamily::Shannon};
      }
      const auto report =
          photonstat::run_entropy(parse_state_spec(spec_a), families,
                                  entropy_qs, entropy_bits, entropy_opts.eps);
      emit(render(report, parse_format(entropy_opts.format)),
           entropy_opts.out_path);
    } else if (figure_cmd->parsed()) {
      const auto figure = photonstat::run_figure(figure_id, figure_opts.eps);
      emit(render(figure, parse_format(figure_opts.format)),
           figure_opts.out_path);
    } else if (sample_cmd->parsed()) {
      const auto report = photonstat::run_sample(parse_state_spec(spec_a),
                                                 n_samples, seed,
                                                 sample_opts.eps);
      emit(render(report, parse_format(sample_opts.format)),
           sample_opts.out_path);
    }
  } catch (const photonstat::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const photonstat::SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
