#pragma once

// Report documents backing the CLI: comparison, classification, entropy,
// figure-preset and sampling outputs rendered as CSV or JSON. Rendering is
// deterministic: fixed 17-significant-digit float formatting, no
// timestamps, stable key order.

#include <cstdint>
#include <string>
#include <vector>

#include "photonstat/distribution.hpp"
#include "photonstat/entropy.hpp"
#include "photonstat/majorize.hpp"
#include "photonstat/sampling.hpp"
#include "photonstat/splitter.hpp"
#include "photonstat/state_spec.hpp"

namespace photonstat {

enum class OutputFormat { Csv, Json };

// Confidence grid used in reports: the canonical 999-point grid plus the
// highlighted levels {0.80, 0.85, 0.9, 0.95, 0.995, 0.997}.
std::vector<double> report_alpha_grid();

struct ConfidenceRow {
  double alpha;
  int n_a;
  int n_b;
};

struct CompareReport {
  std::string spec_a;
  std::string spec_b;
  double eps;
  double tol;
  MajorizationVerdict verdict;
  Moments moments_a;
  Moments moments_b;
  std::vector<double> sums_a;  // zero-padded to a common length
  std::vector<double> sums_b;
  std::vector<ConfidenceRow> confidence;
};

CompareReport run_compare(const StateSpec& a, const StateSpec& b,
                          double tol = kDefaultTol, double eps = kDefaultEps);
std::string render(const CompareReport& report, OutputFormat format);

enum class ClassifyCriterion { Poisson, Clustering };

struct ClassifyReport {
  std::string spec;
  ClassifyCriterion criterion;
  double eps;
  double tol;
  std::string verdict;
  std::vector<CrossingPoint> crossings;
  double mean;
  double variance;
  double variance_ratio;  // variance / mean
  bool has_covariance = false;
  double covariance = 0.0;
  // Largest confidence level below the first crossing; 1 when the verdict
  // is strict over the whole range.
  double effective_up_to_alpha = 1.0;
};

ClassifyReport run_classify(const StateSpec& spec, ClassifyCriterion criterion,
                            double tol = kDefaultTol,
                            double eps = kDefaultEps);
std::string render(const ClassifyReport& report, OutputFormat format);

struct FigureCurve {
  std::string label;
  std::vector<double> partial_sums;
};

// Fixed parameter sets for the data files behind the figure presets; the
// id selects which states are profiled (see known_figure_ids / --help).
struct FigureData {
  int id;
  std::string description;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<FigureCurve> curves;  // padded to a common length
};

std::vector<int> known_figure_ids();
std::string figure_description(int id);
FigureData run_figure(int id, double eps = kDefaultEps);
std::string render(const FigureData& figure, OutputFormat format);

struct DistReport {
  std::string spec;
  double eps;
  Moments m;
  double tail_bound;
  std::vector<double> probs;
};

DistReport run_dist(const StateSpec& spec, double eps = kDefaultEps);
std::string render(const DistReport& report, OutputFormat format);

struct EntropyRow {
  EntropyFamily family;
  double q;
  double value;  // nats unless bits = true
};

struct EntropyReport {
  std::string spec;
  double eps;
  bool bits = false;
  std::vector<EntropyRow> rows;
};

EntropyReport run_entropy(const StateSpec& spec,
                          const std::vector<EntropyFamily>& families,
                          const std::vector<double>& qs, bool bits = false,
                          double eps = kDefaultEps);
std::string render(const EntropyReport& report, OutputFormat format);

struct SampleRunReport {
  std::string spec;
  double eps;
  SampleReport samples;
};

SampleRunReport run_sample(const StateSpec& spec, std::uint64_t n_samples,
                           std::uint64_t seed, double eps = kDefaultEps);
std::string render(const SampleRunReport& report, OutputFormat format);

}  // namespace photonstat
