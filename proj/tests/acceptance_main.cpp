// Acceptance suite: runs every acceptance criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. The CLI path may
// be passed as argv[1] so the determinism criterion can exercise the
// installed binary; without it, the library-level writers are checked.
//
// Exit code: number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "photonstat/entropy.hpp"
#include "photonstat/fock.hpp"
#include "photonstat/majorize.hpp"
#include "photonstat/report.hpp"
#include "photonstat/sampling.hpp"
#include "photonstat/splitter.hpp"
#include "photonstat/state_spec.hpp"
#include "photonstat/states.hpp"

using namespace photonstat;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

PhotonDistribution state(const std::string& spec) {
  return build_distribution(parse_state_spec(spec));
}

const std::vector<std::string>& zoo() {
  static const std::vector<std::string> specs = {
      "coherent(1)",
      "coherent(5)",
      "thermal(1)",
      "thermal(1.5)",
      "thermal(10)",
      "number(1)",
      "number(5)",
      "squeezed_target(mean=6,var=3.6)",
      "squeezed_target(mean=6,var=12)",
      "squeezed_target(mean=6,var=84)",
      "mix(0.9;number(1);thermal(11))",
  };
  return specs;
}

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
  double sum = 0.0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    sum += std::abs(x - y);
  }
  return 0.5 * sum;
}

const CrossingPoint& first_crossing(const std::vector<CrossingPoint>& cs) {
  check(!cs.empty(), "expected at least one crossing");
  return cs.front();
}

void expect_crossing(const CrossingPoint& cp, double alpha_lo, double alpha_hi,
                     double size_lo, double size_hi, std::ostringstream& out,
                     const std::string& label) {
  check(cp.alpha >= alpha_lo && cp.alpha <= alpha_hi,
        label + ": alpha " + fmt(cp.alpha) + " outside [" + fmt(alpha_lo) +
            ", " + fmt(alpha_hi) + "]");
  check(cp.interval_size() >= size_lo && cp.interval_size() <= size_hi,
        label + ": crossing index " + fmt(cp.interval_size()) + " outside [" +
            fmt(size_lo) + ", " + fmt(size_hi) + "]");
  out << label << ": alpha=" << fmt(cp.alpha)
      << " index=" << fmt(cp.interval_size()) << "  ";
}

// ---- criterion bodies -----------------------------------------------------

void criterion1(std::ostringstream& out) {
  const auto v = compare(order_profile(state("thermal(1.5)")),
                         order_profile(state("coherent(1.5)")));
  check(v.order == Order::Incomparable, "expected incomparable");
  expect_crossing(first_crossing(v.crossings), 0.77, 0.83, 2.0, 4.0, out,
                  "thermal(1.5) vs coherent(1.5)");
}

void criterion2(std::ostringstream& out) {
  const auto coh = state("coherent(100)");
  const auto th = state("thermal(10)");
  const auto pc = order_profile(coh);
  const auto pt = order_profile(th);
  const auto v = compare(pc, pt);
  check(v.order == Order::Incomparable, "expected incomparable");
  const auto& cp = first_crossing(v.crossings);
  expect_crossing(cp, 0.990, 0.999, 50.0, 64.0, out,
                  "coherent(100) vs thermal(10)");
  check(v.crossings.size() == 1, "expected a single crossing");
  check(cp.above_before == ProfileSide::B,
        "thermal must lead below the crossing");
  for (std::size_t n = 0; n < static_cast<std::size_t>(cp.n_interp); ++n) {
    check(pt.partial_sums[n] > pc.partial_sums[n],
          "thermal partial sums must exceed coherent's below the crossing");
  }
  const auto mt = moments(th);
  const auto mc = moments(coh);
  check(std::abs(mt.variance - 110.0) <= 1e-6,
        "thermal variance: " + fmt(mt.variance));
  check(std::abs(mc.variance - 100.0) <= 1e-6,
        "coherent variance: " + fmt(mc.variance));
  out << "variances " << fmt(mt.variance) << "/" << fmt(mc.variance);
}

void criterion3(std::ostringstream& out) {
  const auto sub = order_profile(state("squeezed_target(mean=6,var=3.6)"));
  const auto sup = order_profile(state("squeezed_target(mean=6,var=84)"));
  const auto coh = order_profile(state("coherent(6)"));

  const auto v1 = compare(sub, sup);
  check(v1.order == Order::Incomparable, "sub vs super: expected incomparable");
  const auto& c1 = first_crossing(v1.crossings);
  check(c1.alpha >= 0.55 && c1.alpha <= 0.65,
        "sub vs super alpha " + fmt(c1.alpha) + " outside [0.55, 0.65]");
  out << "sub/super: alpha=" << fmt(c1.alpha)
      << " index=" << fmt(c1.interval_size()) << "  ";

  const auto v2 = compare(coh, sup);
  check(v2.order == Order::Incomparable,
        "coherent vs super: expected incomparable");
  expect_crossing(first_crossing(v2.crossings), 0.80, 0.90, 5.0, 9.0, out,
                  "coh/super");

  const auto v3 = compare(sub, coh);
  check(v3.order == Order::Incomparable,
        "sub vs coherent: expected incomparable");
  expect_crossing(first_crossing(v3.crossings), 0.995, 0.999, 12.0, 16.0, out,
                  "sub/coh");
}

void criterion4(std::ostringstream& out) {
  const auto d = state("squeezed_target(mean=6,var=12)");

  const auto pv = classify_poissonian(d);
  check(pv.cls == PoissonClass::Incomparable,
        "poisson classification: expected incomparable");
  const auto& pc = first_crossing(pv.crossings);
  check(pc.alpha >= 0.88, "poisson first crossing at alpha " + fmt(pc.alpha));
  check(pc.above_before == ProfileSide::A,
        "state must lead the Poisson reference below the crossing");

  const auto cv = classify_clustering(d);
  check(cv.cls == ClusterClass::Incomparable,
        "clustering classification: expected incomparable");
  const auto& cc = first_crossing(cv.crossings);
  check(cc.alpha >= 0.88, "clustering first crossing at alpha " + fmt(cc.alpha));
  check(cc.above_before == ProfileSide::A,
        "number-sum profile must lead below the crossing");
  out << "over-poissonian up to alpha=" << fmt(pc.alpha)
      << ", anti-clustered up to alpha=" << fmt(cc.alpha);
}

void criterion5(std::ostringstream& out) {
  const auto d = state("mix(0.9;number(1);thermal(11))");
  const auto m = moments(d);
  check(d.probs()[1] >= 0.905 && d.probs()[1] <= 0.910,
        "p1 = " + fmt(d.probs()[1]));
  const double ratio = m.variance / m.mean;
  check(ratio >= 10.5 && ratio <= 11.5, "variance ratio " + fmt(ratio));
  const double silent = prob_single_detector_silent(d);
  check(silent >= 0.92, "single-detector probability " + fmt(silent));

  const auto pv = classify_poissonian(d);
  check(pv.cls == PoissonClass::Incomparable, "expected incomparable (poisson)");
  const auto& pc = first_crossing(pv.crossings);
  check(pc.alpha >= 0.88 && pc.above_before == ProfileSide::A,
        "effective over-poissonian range ends at " + fmt(pc.alpha));

  const auto cv = classify_clustering(d);
  check(cv.cls == ClusterClass::Incomparable,
        "expected incomparable (clustering)");
  const auto& cc = first_crossing(cv.crossings);
  check(cc.alpha >= 0.88 && cc.above_before == ProfileSide::A,
        "effective anti-clustering range ends at " + fmt(cc.alpha));
  out << "p1=" << fmt(d.probs()[1]) << " var/mean=" << fmt(ratio)
      << " silent=" << fmt(silent) << " alphas=" << fmt(pc.alpha) << "/"
      << fmt(cc.alpha);
}

void criterion6(std::ostringstream& out) {
  for (double mean : {0.1, 1.0, 1.5, 10.0, 100.0}) {
    const auto profile = order_profile(thermal_distribution(mean));
    for (std::size_t n = 0; n < profile.partial_sums.size(); ++n) {
      check(std::abs(profile.partial_sums[n] -
                     thermal_partial_sum_closed_form(
                         mean, static_cast<long long>(n))) <= 1e-12,
            "thermal closed form deviates at mean " + fmt(mean));
    }
  }
  double worst_dvm = 0.0;
  double worst_cov = 0.0;
  for (const auto& spec : zoo()) {
    const auto d = state(spec);
    const auto m = moments(d);
    const auto dm = number_difference_distribution(d).moments();
    const auto joint = joint_distribution_brute_force(d);
    const double cov = detector_covariance(d);
    worst_dvm = std::max(worst_dvm,
                         std::abs(dm.variance - m.mean) / std::max(m.mean, 1.0));
    worst_cov = std::max({worst_cov, std::abs(cov - joint.covariance()),
                          std::abs(cov - 0.25 * (m.variance - dm.variance))});
    check(std::abs(dm.variance - m.mean) <= 1e-9 * std::max(m.mean, 1.0),
          spec + ": difference variance vs mean");
    check(std::abs(cov - joint.covariance()) <= 1e-9,
          spec + ": covariance vs joint enumeration");
    check(std::abs(cov - 0.25 * (m.variance - dm.variance)) <= 1e-9,
          spec + ": covariance vs sum/difference variances");
  }
  out << "closed forms <=1e-12; worst diff-variance dev " << fmt(worst_dvm)
      << ", worst covariance gap " << fmt(worst_cov);
}

void criterion7(std::ostringstream& out) {
  double worst_tv = 0.0;
  for (double big_r : {0.0, 1.0, 2.0}) {
    for (double r : {0.25, 0.75}) {
      const SqueezedParams p{big_r, r};
      const auto fock = build_squeezed_state_auto(p, 1e-12);
      const auto closed = squeezed_closed_form_prefix(p, fock.dim());
      const double tv = total_variation(fock.photon_probabilities(), closed);
      worst_tv = std::max(worst_tv, tv);
      check(tv < 1e-8, "closed-form TV " + fmt(tv) + " at R=" + fmt(big_r) +
                           " r=" + fmt(r));
    }
  }
  double worst_mc = 0.0;
  for (const char* spec : {"coherent(1)", "thermal(1.5)",
                           "squeezed_target(mean=6,var=3.6)"}) {
    const auto d = state(spec);
    const auto rep = sample_beam_splitter(d, 1000000, 42);
    const auto emp = empirical_difference(rep, d.n_max());
    const auto exact = number_difference_distribution(d);
    const double tv = total_variation(emp.probs(), exact.probs());
    worst_mc = std::max(worst_mc, tv);
    check(tv < 0.01, std::string(spec) + ": Monte-Carlo TV " + fmt(tv));
  }
  out << "closed-form TV<=" << fmt(worst_tv) << ", Monte-Carlo TV<="
      << fmt(worst_mc);
}

void criterion8(std::ostringstream& out) {
  const double means[] = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  for (std::size_t i = 0; i < std::size(means); ++i) {
    for (std::size_t j = i + 1; j < std::size(means); ++j) {
      const auto v = compare(order_profile(coherent_distribution(means[i])),
                             order_profile(coherent_distribution(means[j])));
      check(v.order == Order::Majorizes,
            "coherent(" + fmt(means[i]) + ") must majorize coherent(" +
                fmt(means[j]) + ")");
    }
  }

  const auto vac = state("squeezed_target(mean=6,var=84)");
  double odd_mass = 0.0;
  for (std::size_t n = 1; n < vac.size(); n += 2) odd_mass += vac.probs()[n];
  check(odd_mass <= 1e-12, "squeezed-vacuum odd mass " + fmt(odd_mass));

  const std::vector<double> qs = {0.25, 0.5, 2.0, 5.0, 10.0};
  const auto grid = alpha_grid_999();
  int strict_pairs = 0;
  for (const auto& sa : zoo()) {
    for (const auto& sb : zoo()) {
      if (sa == sb) continue;
      const auto da = state(sa);
      const auto db = state(sb);
      const auto pa = order_profile(da);
      const auto pb = order_profile(db);
      const auto order = compare(pa, pb).order;
      if (order != Order::Majorizes && order != Order::MajorizedBy) continue;
      ++strict_pairs;
      const auto schur = schur_consistency(da, db, qs);
      check(schur.violations.empty(),
            sa + " vs " + sb + ": Schur-concavity violation");
      const auto eq = equivalence_check(pa, pb, grid);
      check(eq.violations.empty(),
            sa + " vs " + sb + ": confidence-interval violation");
    }
  }
  check(strict_pairs > 0, "no strict pairs found in the zoo");
  out << "poisson ordering ok; odd mass " << fmt(odd_mass) << "; "
      << strict_pairs << " strict pairs, 0 violations (schur + 999-point grid)";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion9(std::ostringstream& out, const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "photonstat_acceptance";
  fs::create_directories(dir);

  if (!cli.empty()) {
    const auto run = [&](const std::string& args) {
      const std::string cmd = cli + " " + args;
      check(std::system(cmd.c_str()) == 0, "command failed: " + cmd);
    };
    const fs::path f1 = dir / "figure_a.csv";
    const fs::path f2 = dir / "figure_b.csv";
    run("figure 5 --out " + f1.string());
    run("figure 5 --out " + f2.string());
    const std::string fig_a = read_file(f1);
    check(!fig_a.empty() && fig_a == read_file(f2),
          "figure invocations are not byte-identical");

    const fs::path s1 = dir / "sample_a.csv";
    const fs::path s2 = dir / "sample_b.csv";
    run("sample \"coherent(1)\" --n 50000 --seed 42 --out " + s1.string());
    run("sample \"coherent(1)\" --n 50000 --seed 42 --out " + s2.string());
    const std::string samp_a = read_file(s1);
    check(!samp_a.empty() && samp_a == read_file(s2),
          "sample invocations are not byte-identical");
    out << "CLI figure and sample outputs byte-identical (" << fig_a.size()
        << " / " << samp_a.size() << " bytes)";
  } else {
    const auto fig_a = render(run_figure(5), OutputFormat::Csv);
    const auto fig_b = render(run_figure(5), OutputFormat::Csv);
    check(fig_a == fig_b, "figure renders differ");
    const auto spec = parse_state_spec("coherent(1)");
    const auto samp_a = render(run_sample(spec, 50000, 42), OutputFormat::Csv);
    const auto samp_b = render(run_sample(spec, 50000, 42), OutputFormat::Csv);
    check(samp_a == samp_b, "sample renders differ");
    out << "library renders byte-identical (no CLI path given)";
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  const std::vector<Criterion> criteria = {
      {1, "thermal vs coherent crossing at mean 1.5",
       [](std::ostringstream& o) { criterion1(o); }},
      {2, "coherent(100) vs thermal(10) near-majorization",
       [](std::ostringstream& o) { criterion2(o); }},
      {3, "squeezed-state crossings at mean 6",
       [](std::ostringstream& o) { criterion3(o); }},
      {4, "variance-12 squeezed state: effective classifications",
       [](std::ostringstream& o) { criterion4(o); }},
      {5, "one-photon/thermal mixture",
       [](std::ostringstream& o) { criterion5(o); }},
      {6, "closed-form exactness and covariance identities",
       [](std::ostringstream& o) { criterion6(o); }},
      {7, "oracle equivalence (closed form and Monte-Carlo)",
       [](std::ostringstream& o) { criterion7(o); }},
      {8, "property suites (ordering, parity, Schur, intervals)",
       [](std::ostringstream& o) { criterion8(o); }},
      {9, "byte-identical repeated outputs",
       [&](std::ostringstream& o) { criterion9(o, cli); }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::ostringstream detail;
    bool ok = true;
    std::string error;
    try {
      criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    if (!ok) ++failures;
    std::printf("%s  %d  %-55s %s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(),
                ok ? detail.str().c_str() : error.c_str());
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures;
}
