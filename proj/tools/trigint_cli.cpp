// trigint: experiment runner for trigonometric interpolation error asymptotics.
//
//   trigint verify --psi exp:alpha=1,r=2 --beta const:0 --p 1,2,inf --n 2..5 --out report.csv
//   trigint constants --p 1,2,inf
//   trigint favard --m 0..5
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <variant>

#include <CLI11.hpp>

#include "trigint/asymptotics.hpp"
#include "trigint/harness.hpp"
#include "trigint/sequences.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

void print_summary(const trigint::ExperimentReport& report) {
  std::printf("%-5s %4s %14s %14s %14s %14s %10s\n", "p", "n", "empirical", "bracket_lo", "bracket_hi", "prediction",
              "ratio");
  for (const auto& r : report.rows) {
    char ratio[32] = "-";
    if (r.underflow)
      std::snprintf(ratio, sizeof ratio, "underflow");
    else if (r.ratio)
      std::snprintf(ratio, sizeof ratio, "%.6f", *r.ratio);
    std::printf("%-5s %4d %14.6e %14.6e %14.6e %14.6e %10s\n", r.p.to_string().c_str(), r.n, r.empirical_lower,
                r.bracket_lower, r.bracket_upper, r.prediction_main, ratio);
  }
}

std::vector<int> default_n_list(const std::string& psi_spec) {
  const auto psi = trigint::parse_psi(psi_spec);
  if (std::holds_alternative<trigint::PowerLaw>(psi.kind())) return trigint::parse_int_list("2..64");
  return trigint::parse_int_list("2..5");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric interpolation on 2n-1 equidistant nodes: L_p error experiments"};
  app.require_subcommand(1);

  std::string psi_spec, beta_spec = "const:0", p_text = "1,2,inf", n_text, out_path, format_text = "csv";
  std::string gnuplot_path, comparator;
  double delta_div = 64.0, delta = 0.0, tol = 1e-10;
  unsigned threads = 0;

  auto* verify = app.add_subcommand("verify", "Measure interpolation errors against the asymptotic prediction");
  verify->add_option("--psi", psi_spec, "Coefficient sequence, e.g. exp:alpha=1,r=2 | pow:r=3 | factorial | table:1,0.5")
      ->required();
  verify->add_option("--beta", beta_spec, "Phase sequence, e.g. const:0 | table:0,1,0.5")->capture_default_str();
  verify->add_option("--p", p_text, "Norm exponents, e.g. 1,2,inf")->capture_default_str();
  verify->add_option("--n", n_text, "Interpolation orders, e.g. 2..5 or 2,4,8 (default 2..5; 2..64 for pow)");
  auto* div_opt = verify->add_option("--delta-div", delta_div, "delta = pi/(n d)")->capture_default_str();
  verify->add_option("--delta", delta, "Fixed box width delta (overrides --delta-div)")->excludes(div_opt);
  verify->add_option("--tol", tol, "Series truncation tolerance")->capture_default_str();
  verify->add_option("--out", out_path, "Report file");
  verify->add_option("--format", format_text, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  verify->add_option("--gnuplot-data", gnuplot_path, "Write (n, ratio) blocks per p");
  verify->add_option("--comparator", comparator, "Extra comparator column")->check(CLI::IsMember({"motornyi"}));
  verify->add_option("--threads", threads, "Worker threads (0: hardware)");

  std::string cp_text = "1,2,inf";
  auto* constants = app.add_subcommand("constants", "Print the leading error constants");
  constants->add_option("--p", cp_text, "Norm exponents")->capture_default_str();

  std::string m_text = "0..5";
  auto* favard = app.add_subcommand("favard", "Print Favard constants K_m");
  favard->add_option("--m", m_text, "Indices, e.g. 0..5")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) {
      trigint::ExperimentConfig config;
      config.psi_spec = psi_spec;
      config.beta_spec = beta_spec;
      config.p_list = trigint::parse_p_list(p_text);
      config.n_list = n_text.empty() ? default_n_list(psi_spec) : trigint::parse_int_list(n_text);
      if (verify->count("--delta") > 0)
        config.delta_rule = trigint::FixedDelta{delta};
      else
        config.delta_rule = trigint::ScaledDelta{delta_div};
      config.tol = tol;
      config.output = out_path;
      config.format = format_text == "json" ? trigint::ReportFormat::json : trigint::ReportFormat::csv;
      if (!gnuplot_path.empty()) config.gnuplot_data = gnuplot_path;
      config.motornyi_comparator = comparator == "motornyi";
      config.threads = threads;
      print_summary(trigint::run_experiment(config));
    } else if (*constants) {
      std::printf("%-6s %-22s %s\n", "p", "main_constant", "cos_norm");
      for (auto p : trigint::parse_p_list(cp_text))
        std::printf("%-6s %-22.17g %.17g\n", p.to_string().c_str(), trigint::main_constant(p), trigint::cos_norm(p));
    } else if (*favard) {
      std::printf("%-4s %s\n", "m", "K_m");
      for (int m : trigint::parse_int_list(m_text)) {
        if (m < 0) throw trigint::ConfigError("favard index must be >= 0");
        std::printf("%-4d %.17g\n", m, trigint::favard(m));
      }
    }
  } catch (const trigint::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {  // ConfigError, ParseError
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
