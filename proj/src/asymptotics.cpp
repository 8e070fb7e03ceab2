#include "trigint/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace trigint {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kBracketPeaks = 3;
constexpr double kGoldenTol = 1e-6;

// Maximizes g on [a, b] by golden-section search.
template <class F>
std::pair<double, double> golden_max(F&& g, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > kGoldenTol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  return gc >= gd ? std::pair{c, gc} : std::pair{d, gd};
}

double reduce_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// sum_{nu>=0} (-1)^nu (2nu+1)^{-s} by the Cohen-Rodriguez Villegas-Zagier
// acceleration; error below 2 (3+sqrt 8)^{-terms}.
double alternating_odd_series(double s, int terms) {
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * std::pow(2.0 * k + 1.0, -s);
    b *= (static_cast<double>(k) + terms) * (static_cast<double>(k) - terms) /
         ((static_cast<double>(k) + 0.5) * (static_cast<double>(k) + 1.0));
  }
  return sum / d;
}

// sum_{nu>=0} (2nu+1)^{-s}, s >= 2: direct terms until they fall below
// term_tol, then an Euler-Maclaurin remainder from that index on.
double monotone_odd_series(double s, double term_tol) {
  constexpr int kMaxDirect = 200;
  double sum = 0.0;
  int nu = 0;
  for (; nu < kMaxDirect; ++nu) {
    const double term = std::pow(2.0 * nu + 1.0, -s);
    if (term < term_tol) break;
    sum += term;
  }
  const double u = 2.0 * nu + 1.0;
  const double f = std::pow(u, -s);
  double tail = f * u / (2.0 * (s - 1.0)) + 0.5 * f + f * s / (6.0 * u);
  tail -= 8.0 * f * s * (s + 1) * (s + 2) / (720.0 * u * u * u);
  tail += 32.0 * f * s * (s + 1) * (s + 2) * (s + 3) * (s + 4) / (30240.0 * std::pow(u, 5));
  return sum + tail;
}

}  // namespace

double PhiWave::operator()(double x) const {
  const double arg = n * x - 0.5 * theta;
  return std::cos(arg) * (1.0 - std::cos(x - theta)) - std::sin(arg) * std::sin(x - theta);
}

double PhiWave::product_form(double x) const {
  return 2.0 * std::sin(0.5 * (2 * n - 1) * x) * std::sin(0.5 * (theta - x));
}

namespace envelope_bounds {

double r_theta(double x, double theta) { return 2.0 * std::abs(std::sin(0.5 * (x - theta))); }

double variation_rp(double p) { return std::pow(2.0, p + 1.0); }

double r_theta_norm(PNorm p) { return 2.0 * cos_norm(p); }

double error_constant(PNorm p) {
  if (p.is_infinite()) return 1.0;
  const double q = p.value();
  if (q == 1.0) return 8.0;
  return 1.0 + 4.0 / (q * std::pow(cos_norm(p), q - 1.0));
}

}  // namespace envelope_bounds

double phi_wave_limit(PNorm p) {
  const double c = cos_norm(p);
  return std::pow(2.0, 1.0 - p.inverse()) * std::pow(M_PI, -p.inverse()) * c * c;
}

double phi_wave_norm(int n, double theta, PNorm p, const QuadratureConfig& cfg) {
  if (n < 1) throw std::domain_error("phi_wave_norm: n must be >= 1");
  const PhiWave wave{n, theta};
  return lp_norm([&](double x) { return wave(x); }, p, adapted_to(cfg, n));
}

AnBracket an_bracket(int n, double beta_n, PNorm p, const QuadratureConfig& cfg) {
  if (n < 1) throw std::domain_error("an_bracket: n must be >= 1");
  auto norm_at = [&](double theta) { return phi_wave_norm(n, theta, p, cfg); };

  const double theta_lower = reduce_angle(M_PI * beta_n);
  const double lower = norm_at(theta_lower);

  const int grid = std::max(4 * n, 16);
  const double step = kTwoPi / grid;
  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) values[i] = norm_at(step * i);

  std::vector<int> peaks;
  for (int i = 0; i < grid; ++i)
    if (values[i] >= values[(i + grid - 1) % grid] && values[i] >= values[(i + 1) % grid]) peaks.push_back(i);
  const auto top = std::min<std::size_t>(kBracketPeaks, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(top), peaks.end(),
                    [&](int a, int b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });

  double best = lower, best_theta = theta_lower;
  for (int i = 0; i < grid; ++i)
    if (values[i] > best) best = values[i], best_theta = step * i;
  for (std::size_t c = 0; c < top; ++c) {
    const double center = step * peaks[c];
    const auto [theta, value] = golden_max(norm_at, center - step, center + step);
    if (value > best) best = value, best_theta = reduce_angle(theta);
  }
  return {0.5 * lower, 0.5 * best, best_theta};
}

double main_constant(PNorm p) {
  const double c = cos_norm(p);
  return std::pow(2.0, 1.0 - p.inverse()) * std::pow(M_PI, -(1.0 + p.inverse())) * c * c;
}

ErrorPrediction predict_error(const PsiSequence& seq, std::int64_t n, PNorm p, double slack_constant) {
  if (n < 1) throw std::domain_error("predict_error: n must be >= 1");
  const double psi_n = psi_value(seq, n);
  const double nd = static_cast<double>(n);
  double eps = 1.0;
  try {
    eps = epsilon_n(seq, n);
  } catch (const std::domain_error&) {
    // Short tables have no eps_n; use the tail-sum form below.
  }
  const double slack = eps < 1.0 ? slack_constant * psi_n * (1.0 / nd + eps / (1.0 - eps))
                                 : slack_constant * (psi_n / nd + psi_tail_sum(seq, n));
  return {main_constant(p) * psi_n, slack};
}

Theorem2Check theorem2_check(double alpha, double r, std::int64_t n) {
  if (!(alpha > 0.0)) throw std::domain_error("theorem2_check: alpha must be positive");
  if (!(r > 1.0)) throw std::domain_error("theorem2_check: r must exceed 1");
  if (n < 1) throw std::domain_error("theorem2_check: n must be >= 1");
  const double nd = static_cast<double>(n);
  const bool admissible = std::pow(nd, 1.0 - r) * std::log1p(nd) <= alpha * r;
  const double eps = psi_ratio(PsiSequence::gaussian_exponential(alpha, r), n);
  const double ratio_term = eps / (1.0 - eps);
  const double bound = 2.0 / nd;
  return {admissible, eps, ratio_term, bound, !admissible || ratio_term <= bound};
}

ErrorPrediction theorem3_prediction(double r, std::int64_t n, PNorm p, double slack_constant) {
  if (!(r > 1.0)) throw std::domain_error("theorem3_prediction: r must exceed 1");
  if (n < 1) throw std::domain_error("theorem3_prediction: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double scale = std::pow(nd, -r);
  const double decay = std::exp(-r / (nd + 1.0));
  const double tail = r >= nd + 1.0 ? decay : decay * (1.0 + nd / (r - 1.0));
  return {main_constant(p) * scale, slack_constant * scale * (1.0 / nd + tail)};
}

double favard(int m, double tol) {
  if (m < 0) throw std::domain_error("favard: m must be >= 0");
  if (!(tol > 0.0)) throw std::domain_error("favard: tol must be positive");
  const double s = m + 1.0;
  double series = 0.0;
  if ((m + 1) % 2 == 1) {
    const int terms = std::clamp(static_cast<int>(std::ceil(std::log(20.0 / tol) / std::log(3.0 + std::sqrt(8.0)))) + 1,
                                 4, 60);
    series = alternating_odd_series(s, terms);
  } else {
    series = monotone_odd_series(s, tol / 10.0);
  }
  return 4.0 / M_PI * series;
}

double motornyi_main_term(int r, std::int64_t n) {
  if (r < 1) throw std::domain_error("motornyi_main_term: r must be >= 1");
  if (n < 2) throw std::domain_error("motornyi_main_term: n must be >= 2");
  const double nd = static_cast<double>(n);
  return 2.0 * favard(r - 1) * std::log(nd) / (M_PI * std::pow(nd, r));
}

}  // namespace trigint
