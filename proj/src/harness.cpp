#include "trigint/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "trigint/asymptotics.hpp"
#include "trigint/classes.hpp"
#include "trigint/interpolation.hpp"
#include "trigint/sequences.hpp"

namespace trigint {
namespace {

// Truncation accuracy of the class member relative to psi(n).
constexpr double kSignalFraction = 1e-6;

std::optional<double> motornyi_for(const PsiSequence& psi, int n) {
  const auto* power = std::get_if<PowerLaw>(&psi.kind());
  if (power == nullptr || n < 2) return std::nullopt;
  const double r = power->r;
  if (r != std::floor(r) || r > 1000.0) return std::nullopt;
  return motornyi_main_term(static_cast<int>(r), n);
}

ReportRow compute_row(const ExperimentConfig& config, const Kernel& kernel, PNorm p, int n) {
  ReportRow row;
  row.psi = config.psi_spec;
  row.beta = config.beta_spec;
  row.p = p;
  row.n = n;
  row.delta = delta_for(config.delta_rule, n);

  const PsiSample psi_n = psi_sample(kernel.psi, n);
  row.underflow = psi_n.underflow;

  // Empirical error of one admissible class member, through the full pipeline.
  // The error scales with psi(n); an absolute tol above it would truncate the
  // very frequencies being measured.
  const double accuracy = psi_n.value > 0.0 ? std::min(config.tol, kSignalFraction * psi_n.value) : config.tol;
  const ClassFunction f = class_function(kernel, make_box_phi(n, row.delta), 0.0, accuracy);
  std::vector<double> samples;
  for (double x : nodes(n).nodes) samples.push_back(f(x));
  const TrigPolynomial interpolant = interpolate(n, samples);
  const auto error_grid = [&](int points) {
    std::vector<double> values = f.sample_grid(points);
    const double h = 2.0 * M_PI / points;
    for (int i = 0; i < points; ++i) values[i] -= eval_poly(interpolant, h * i);
    return values;
  };
  row.empirical_lower = lp_norm(error_grid, [&](double x) { return f(x) - eval_poly(interpolant, x); }, p,
                                adapted_to(config.quadrature, n));

  const AnBracket bracket = an_bracket(n, kernel.beta(n), p, config.quadrature);
  // Sup-norm bound on the aliasing remainder, carried into L_p over the period.
  const double remainder_bound = remainder_lp_bound(kernel.psi, n, p);
  const double scale = 2.0 / M_PI * psi_n.value;
  row.bracket_lower = scale * bracket.lower - remainder_bound;
  row.bracket_upper = scale * bracket.upper + remainder_bound;

  row.prediction_main = main_constant(p) * psi_n.value;
  if (!row.underflow && row.prediction_main > 0.0) row.ratio = row.empirical_lower / row.prediction_main;
  row.tail = psi_tail_sum(kernel.psi, n);
  try {
    row.eps_n = epsilon_n(kernel.psi, n);
  } catch (const std::domain_error&) {
  }
  if (config.motornyi_comparator) row.motornyi = motornyi_for(kernel.psi, n);
  return row;
}

}  // namespace

double remainder_lp_bound(const PsiSequence& psi, int n, PNorm p) {
  const double sup = 2.0 * tail_upper_bound(psi, n);
  return p.is_infinite() ? sup : std::pow(2.0 * M_PI, p.inverse()) * sup;
}

double delta_for(const DeltaRule& rule, int n) {
  if (const auto* fixed = std::get_if<FixedDelta>(&rule)) return fixed->delta;
  return M_PI / (static_cast<double>(n) * std::get<ScaledDelta>(rule).divisor);
}

void ExperimentConfig::validate() const {
  (void)parse_psi(psi_spec);
  (void)parse_beta(beta_spec);
  if (p_list.empty()) throw ConfigError("p list must not be empty");
  if (n_list.empty()) throw ConfigError("n list must not be empty");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (const auto* scaled = std::get_if<ScaledDelta>(&delta_rule); scaled && !(scaled->divisor > 1.0))
    throw ConfigError("delta divisor must exceed 1 so that delta < pi/n");
  for (int n : n_list) {
    if (n < 1) throw ConfigError("n must be >= 1, got " + std::to_string(n));
    const double delta = delta_for(delta_rule, n);
    if (!(delta > 0.0) || !(delta < M_PI / n))
      throw ConfigError("delta " + std::to_string(delta) + " violates 0 < delta < pi/n for n = " + std::to_string(n));
  }
  try {
    quadrature.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

ExperimentReport compute_report(const ExperimentConfig& config) {
  config.validate();
  const Kernel kernel{parse_psi(config.psi_spec), parse_beta(config.beta_spec)};

  std::vector<PNorm> ps = config.p_list;
  std::vector<int> ns = config.n_list;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<std::pair<PNorm, int>> work;
  for (PNorm p : ps)
    for (int n : ns) work.emplace_back(p, n);

  std::vector<std::optional<ReportRow>> rows(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        rows[i] = compute_row(config, kernel, work[i].first, work[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto count = static_cast<unsigned>(std::min<std::size_t>(config.threads ? config.threads : hw, work.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }

  ExperimentReport report;
  report.motornyi_column = config.motornyi_comparator;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::domain_error& e) {
        throw ConfigError("p = " + work[i].first.to_string() + ", n = " + std::to_string(work[i].second) + ": " +
                          e.what());
      }
    }
    report.rows.push_back(std::move(*rows[i]));
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report = compute_report(config);
  if (!config.output.empty()) emit_report(report, config.format, config.output);
  if (config.gnuplot_data) write_file_atomically(*config.gnuplot_data, report_to_gnuplot(report));
  return report;
}

}  // namespace trigint
