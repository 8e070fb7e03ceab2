#pragma once

// Experiment runner: sweeps (p, n) for one coefficient/phase pair, measures
// the interpolation error of the extremal class member end to end and sets it
// against the analytic bracket and the leading-term prediction.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trigint/norms.hpp"

namespace trigint {

/// Invalid experiment configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output file could not be written (maps to CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixedDelta {
  double delta;
};
/// delta = pi / (n divisor).
struct ScaledDelta {
  double divisor = 64.0;
};
using DeltaRule = std::variant<FixedDelta, ScaledDelta>;

[[nodiscard]] double delta_for(const DeltaRule& rule, int n);

class PsiSequence;

/// (2 pi)^{1/p} 2 tail_upper_bound(psi, n): the L_p bound on the aliasing
/// remainder that widens both bracket endpoints.
[[nodiscard]] double remainder_lp_bound(const PsiSequence& psi, int n, PNorm p);

enum class ReportFormat { csv, json };

struct ExperimentConfig {
  std::string psi_spec;
  std::string beta_spec = "const:0";
  std::vector<PNorm> p_list;
  std::vector<int> n_list;
  DeltaRule delta_rule = ScaledDelta{};
  double tol = 1e-10;
  std::filesystem::path output;  ///< empty: no report file
  ReportFormat format = ReportFormat::csv;
  std::optional<std::filesystem::path> gnuplot_data;
  bool motornyi_comparator = false;
  QuadratureConfig quadrature;
  unsigned threads = 0;  ///< 0: hardware concurrency

  /// Throws ConfigError (or ParseError for the sequence specs).
  void validate() const;
};

struct ReportRow {
  std::string psi;
  std::string beta;
  PNorm p{1.0};
  int n = 1;
  double delta = 0.0;
  double empirical_lower = 0.0;
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
  double prediction_main = 0.0;
  std::optional<double> ratio;  ///< absent when psi(n) underflowed or the prediction is zero
  double tail = 0.0;
  std::optional<double> eps_n;  ///< absent when the kind has no eps_n at this n
  bool underflow = false;
  std::optional<double> motornyi;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;  ///< sorted by (p, n)
  bool motornyi_column = false;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Computes every (p, n) row. Deterministic; rows are computed in parallel
/// but the result does not depend on the thread count.
[[nodiscard]] ExperimentReport compute_report(const ExperimentConfig& config);

/// compute_report, then writes config.output and config.gnuplot_data when set.
ExperimentReport run_experiment(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "psi,beta,p,n,delta,empirical_lower,bracket_lower,bracket_upper,prediction_main,ratio,tail,eps_n";

[[nodiscard]] std::string report_to_csv(const ExperimentReport& report);
[[nodiscard]] std::string report_to_json(const ExperimentReport& report);
[[nodiscard]] ExperimentReport report_from_json(std::string_view text);
[[nodiscard]] std::string report_to_gnuplot(const ExperimentReport& report);

/// Writes through a temporary file and a rename. Throws IoError naming path.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& path);
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

/// "2..5", "2,3,8", "1..3,10"; throws ConfigError.
[[nodiscard]] std::vector<int> parse_int_list(std::string_view text);
/// "1,2,inf"; throws ConfigError.
[[nodiscard]] std::vector<PNorm> parse_p_list(std::string_view text);

}  // namespace trigint
