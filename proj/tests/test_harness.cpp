#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigint/asymptotics.hpp"
#include "trigint/harness.hpp"
#include "trigint/sequences.hpp"

using namespace trigint;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.psi_spec = "exp:alpha=1,r=2";
  c.p_list = {PNorm(1), PNorm(2), PNorm::infinity()};
  c.n_list = {2, 3, 4, 5};
  c.quadrature.base_points = 1024;
  return c;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gaussian run tracks the leading term") {
  const ExperimentReport report = compute_report(small_config());
  REQUIRE(report.rows.size() == 12);
  for (const ReportRow& r : report.rows) {
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio > 0.5);
    CHECK(*r.ratio < 1.5);
    CHECK(r.eps_n.has_value());
    CHECK_FALSE(r.underflow);
    CHECK(r.tail > 0.0);
    CHECK(r.delta == doctest::Approx(M_PI / (64.0 * r.n)));
  }
  // Sorted by (p, n).
  CHECK(report.rows.front().p == PNorm(1));
  CHECK(report.rows.front().n == 2);
  CHECK(report.rows.back().p.is_infinite());
  CHECK(report.rows.back().n == 5);
}

TEST_CASE("ratios move towards 1 as n grows") {
  const ExperimentReport report = compute_report(small_config());
  for (std::size_t i = 0; i < report.rows.size(); i += 4) {
    const double first = std::abs(*report.rows[i].ratio - 1);
    // At p = 2 the ratio sits on the sinc(n delta/2) floor for every n, hence the slack.
    for (std::size_t j = i + 1; j < i + 4; ++j) CHECK(std::abs(*report.rows[j].ratio - 1) < first + 1e-3);
    if (!(report.rows[i].p == PNorm(2))) CHECK(std::abs(*report.rows[i + 3].ratio - 1) < first);
  }
}

TEST_CASE("bracket encloses the empirical error") {
  for (const char* beta : {"const:0", "const:0.5", "table:0,1"}) {
    ExperimentConfig c = small_config();
    c.beta_spec = beta;
    for (const ReportRow& r : compute_report(c).rows) {
      // The member f_{n,delta} carries a sinc(n delta/2) factor on its leading
      // term, so the lower endpoint (a bound on the class sup) shrinks by it.
      const double rem = remainder_lp_bound(parse_psi(r.psi), r.n, r.p);
      const double shrink = std::sin(r.n * r.delta / 2) / (r.n * r.delta / 2);
      CHECK(r.bracket_lower <= r.bracket_upper);
      CHECK(shrink * (r.bracket_lower + rem) - rem <= r.empirical_lower);
      CHECK(r.empirical_lower <= r.bracket_upper + c.tol);
    }
  }
}

TEST_CASE("single-coefficient table at n = 1") {
  ExperimentConfig c;
  c.psi_spec = "table:1";
  c.p_list = {PNorm(2)};
  c.n_list = {1};
  c.quadrature.base_points = 256;
  const ExperimentReport report = compute_report(c);
  REQUIRE(report.rows.size() == 1);
  const ReportRow& r = report.rows[0];
  // f = 2a cos x and S_0 f = f(0), so the error is 2a (cos x - 1) with L2 norm 2a sqrt(3 pi).
  const double amp = std::sin(r.delta / 2) / (r.delta / 2) / (2 * M_PI);
  const double expected = 2 * amp * std::sqrt(3 * M_PI);
  CHECK(r.empirical_lower == doctest::Approx(expected).epsilon(1e-9));
  // Same value through the envelope: (2/pi) psi(1) ||Phi_{1,0}||_2 / 2, less the sinc loss.
  const double envelope = 2 / M_PI * 0.5 * phi_wave_norm(1, 0.0, PNorm(2));
  CHECK(std::abs(r.empirical_lower - envelope) <= envelope * r.delta * r.delta / 24);
  CHECK(r.ratio.has_value());
  CHECK(r.tail == 0.0);
}

TEST_CASE("configuration errors") {
  ExperimentConfig c = small_config();
  c.n_list.clear();
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.p_list.clear();
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.delta_rule = FixedDelta{2.0};  // pi/n < 2 for n >= 2
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.delta_rule = ScaledDelta{1.0};
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.tol = 0.0;
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.quadrature.base_points = 4;
  CHECK_THROWS_AS((void)compute_report(c), ConfigError);

  c = small_config();
  c.psi_spec = "exp:alpha=1,q=2";
  try {
    (void)compute_report(c);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'q") != std::string::npos);
  }
}

TEST_CASE("csv output") {
  const ExperimentReport report = compute_report(small_config());
  const std::string csv = report_to_csv(report);
  const auto lines = lines_of(csv);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == kCsvHeader);
  CHECK(lines[1].rfind("exp:alpha=1,r=2", 0) == std::string::npos);  // commas force quoting
  CHECK(lines[1].rfind("\"exp:alpha=1,r=2\",const:0,1,2,", 0) == 0);
  CHECK(lines.back().find(",inf,5,") != std::string::npos);

  ExperimentConfig two = small_config();
  two.p_list = {PNorm(2)};
  two.n_list = {3};
  CHECK(lines_of(report_to_csv(compute_report(two))).size() == 2);
}

TEST_CASE("output is deterministic and independent of thread count") {
  ExperimentConfig one = small_config();
  one.threads = 1;
  ExperimentConfig three = small_config();
  three.threads = 3;
  const std::string a = report_to_csv(compute_report(one));
  CHECK(a == report_to_csv(compute_report(one)));
  CHECK(a == report_to_csv(compute_report(three)));
}

TEST_CASE("json roundtrip") {
  ExperimentConfig c = small_config();
  c.n_list = {2, 27};
  const ExperimentReport report = compute_report(c);
  const ExperimentReport back = report_from_json(report_to_json(report));
  CHECK(back == report);
  CHECK(report_to_json(back) == report_to_json(report));
}

TEST_CASE("underflow is reported, never a ratio") {
  ExperimentConfig c = small_config();
  c.n_list = {26, 27};
  c.p_list = {PNorm(1)};
  const ExperimentReport report = compute_report(c);
  REQUIRE(report.rows.size() == 2);
  CHECK_FALSE(report.rows[0].underflow);
  CHECK(report.rows[0].ratio.has_value());
  CHECK(report.rows[1].underflow);
  CHECK_FALSE(report.rows[1].ratio.has_value());
  const auto lines = lines_of(report_to_csv(report));
  CHECK(lines[2].find(",underflow,") != std::string::npos);
  CHECK(lines[1].find(",underflow,") == std::string::npos);
}

TEST_CASE("files, gnuplot data and io errors") {
  const auto dir = std::filesystem::temp_directory_path() / "trigint_harness_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig c = small_config();
  c.output = dir / "report.json";
  c.format = ReportFormat::json;
  c.gnuplot_data = dir / "ratio.dat";
  const ExperimentReport report = run_experiment(c);
  CHECK(report_from_json(slurp(c.output)) == report);
  CHECK_FALSE(std::filesystem::exists(dir / "report.json.tmp"));

  const auto gp = lines_of(slurp(*c.gnuplot_data));
  REQUIRE(!gp.empty());
  CHECK(gp[0] == "# p = 1");
  CHECK(gp[1] == "# n ratio");
  CHECK(gp[2].rfind("2 ", 0) == 0);
  int blocks = 0;
  for (const auto& l : gp) blocks += l.rfind("# p = ", 0) == 0;
  CHECK(blocks == 3);

  const std::filesystem::path bad = dir / "missing_dir" / "out.csv";
  try {
    emit_report(report, ReportFormat::csv, bad);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK_THROWS_AS(emit_report(ExperimentReport{}, ReportFormat::csv, dir / "empty.csv"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("motornyi comparator column for integer power kernels") {
  ExperimentConfig c;
  c.psi_spec = "pow:r=3";
  c.p_list = {PNorm(1)};
  c.n_list = {2, 4};
  c.tol = 1e-6;
  c.quadrature.base_points = 512;
  c.motornyi_comparator = true;
  const ExperimentReport report = compute_report(c);
  const auto lines = lines_of(report_to_csv(report));
  CHECK(lines[0] == std::string(kCsvHeader) + ",motornyi_main_term");
  for (const ReportRow& r : report.rows) {
    REQUIRE(r.motornyi.has_value());
    CHECK(*r.motornyi > 0.0);
    CHECK_FALSE((r.eps_n.has_value() && *r.eps_n < 1.0));
  }
  c.motornyi_comparator = false;
  CHECK(lines_of(report_to_csv(compute_report(c)))[0] == kCsvHeader);
}

TEST_CASE("power kernel run") {
  ExperimentConfig c;
  c.psi_spec = "pow:r=6";
  c.p_list = {PNorm(1), PNorm::infinity()};
  c.n_list = {4, 8};
  c.tol = 1e-8;
  c.quadrature.base_points = 1024;
  for (const ReportRow& r : compute_report(c).rows) {
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio > 0.5);
    CHECK(*r.ratio < 1.5);
    CHECK(r.empirical_lower <= r.bracket_upper + c.tol);
  }
}

TEST_CASE("list parsers") {
  CHECK(parse_int_list("2..5,8") == std::vector<int>{2, 3, 4, 5, 8});
  CHECK(parse_int_list("7") == std::vector<int>{7});
  CHECK_THROWS_AS((void)parse_int_list("5..2"), ConfigError);
  CHECK_THROWS_AS((void)parse_int_list("a"), ConfigError);
  CHECK_THROWS_AS((void)parse_int_list(""), ConfigError);
  const auto ps = parse_p_list("1,2.5,inf");
  REQUIRE(ps.size() == 3);
  CHECK(ps[1].value() == 2.5);
  CHECK(ps[2].is_infinite());
  CHECK_THROWS_AS((void)parse_p_list("0.5"), ConfigError);
}
