#include "trigint/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace trigint {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kMaxCandidates = 5;

double checked_abs(double y, double x) {
  if (!std::isfinite(y)) throw std::runtime_error("lp_norm: non-finite function value at x = " + std::to_string(x));
  return std::abs(y);
}

// |f| at indices offset, offset+stride, ... of a points-grid, taken from whole
// grids when a sampler is available and pointwise otherwise.
class Samples {
 public:
  Samples(const GridSampler* grid, const PeriodicFunction& f) : grid_(grid), f_(f) {}

  std::vector<double> at(int points, int offset, int stride) const {
    const double h = kTwoPi / points;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>((points - offset + stride - 1) / stride));
    if (grid_ != nullptr) {
      const std::vector<double> all = (*grid_)(points);
      if (static_cast<int>(all.size()) != points) throw std::logic_error("lp_norm: grid sampler returned a wrong size");
      for (int i = offset; i < points; i += stride) out.push_back(checked_abs(all[i], h * i));
    } else {
      for (int i = offset; i < points; i += stride) out.push_back(checked_abs(f_(h * i), h * i));
    }
    return out;
  }

  double point(double x) const { return checked_abs(f_(x), x); }

 private:
  const GridSampler* grid_;
  const PeriodicFunction& f_;
};

double power_sum(const std::vector<double>& values, double p) {
  double sum = 0.0;
  for (double v : values) sum += p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
  return sum;
}

double finite_norm(const Samples& f, double p, const QuadratureConfig& cfg) {
  int points = cfg.base_points;
  double sum = power_sum(f.at(points, 0, 1), p);
  double integral = sum * kTwoPi / points;
  for (int level = 0; level < cfg.refinement_limit; ++level) {
    // New nodes are the midpoints of the current grid.
    sum += power_sum(f.at(2 * points, 1, 2), p);
    points *= 2;
    const double refined = sum * kTwoPi / points;
    const bool converged = std::abs(refined - integral) <= cfg.rel_tol * std::abs(refined);
    integral = refined;
    if (converged) break;
  }
  return std::pow(integral, 1.0 / p);
}

double sup_norm(const Samples& f, const QuadratureConfig& cfg) {
  const int points = cfg.base_points << cfg.refinement_limit;
  const double h = kTwoPi / points;
  const std::vector<double> values = f.at(points, 0, 1);

  // Periodic local maxima of the grid values, largest first.
  std::vector<int> peaks;
  for (int i = 0; i < points; ++i) {
    const double left = values[(i + points - 1) % points];
    const double right = values[(i + 1) % points];
    if (values[i] >= left && values[i] >= right) peaks.push_back(i);
  }
  const auto top = std::min<std::size_t>(kMaxCandidates, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(top), peaks.end(),
                    [&](int a, int b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });

  double best = *std::max_element(values.begin(), values.end());
  for (std::size_t c = 0; c < top; ++c) {
    const int i = peaks[c];
    const double y0 = values[(i + points - 1) % points];
    const double y1 = values[i];
    const double y2 = values[(i + 1) % points];
    const double curvature = y0 - 2.0 * y1 + y2;
    if (!(curvature < 0.0)) continue;
    const double offset = 0.5 * (y0 - y2) / curvature;  // in [-1/2, 1/2] grid steps
    if (std::abs(offset) > 1.0) continue;
    // Keep a value actually attained by f, not the parabola's vertex height.
    best = std::max(best, f.point(h * (i + offset)));
  }
  return best;
}

double norm_of(const Samples& f, PNorm p, const QuadratureConfig& cfg) {
  cfg.validate();
  return p.is_infinite() ? sup_norm(f, cfg) : finite_norm(f, p.value(), cfg);
}

}  // namespace

PNorm::PNorm(double p) : p_(p) {
  if (!(p >= 1.0)) throw std::domain_error("PNorm: p must be >= 1, got " + std::to_string(p));
}

PNorm PNorm::infinity() { return PNorm(std::numeric_limits<double>::infinity()); }

bool PNorm::is_infinite() const noexcept { return std::isinf(p_); }

double PNorm::inverse() const noexcept { return is_infinite() ? 0.0 : 1.0 / p_; }

std::string PNorm::to_string() const {
  if (is_infinite()) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, p_);
  return std::string(buf, res.ptr);
}

PNorm PNorm::parse(const std::string& text) {
  if (text == "inf") return infinity();
  double p = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(p))
    throw std::invalid_argument("invalid norm exponent '" + text + "'");
  return PNorm(p);
}

void QuadratureConfig::validate() const {
  if (base_points < 16) throw std::domain_error("QuadratureConfig: base_points must be >= 16");
  if (refinement_limit < 0 || refinement_limit > 20)
    throw std::domain_error("QuadratureConfig: refinement_limit must lie in [0, 20]");
  if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureConfig: rel_tol must be positive");
}

QuadratureConfig adapted_to(QuadratureConfig cfg, int n) {
  cfg.base_points = std::max(cfg.base_points, 64 * n);
  return cfg;
}

double lp_norm(const PeriodicFunction& f, PNorm p, const QuadratureConfig& cfg) {
  return norm_of(Samples(nullptr, f), p, cfg);
}

double lp_norm(const GridSampler& grid, const PeriodicFunction& f, PNorm p, const QuadratureConfig& cfg) {
  return norm_of(Samples(&grid, f), p, cfg);
}

double cos_norm(PNorm p) {
  if (p.is_infinite()) return 1.0;
  const double q = p.value();
  if (q == 1.0) return 4.0;
  if (q == 2.0) return std::sqrt(M_PI);
  const double log_pth = std::log(2.0) + 0.5 * std::log(M_PI) + std::lgamma(0.5 * (q + 1.0)) - std::lgamma(0.5 * q + 1.0);
  return std::exp(log_pth / q);
}

}  // namespace trigint
