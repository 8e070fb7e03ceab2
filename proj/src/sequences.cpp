#include "trigint/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trigint {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinNormal = std::numeric_limits<double>::min();
constexpr std::int64_t kMaxTailTerms = 50'000'000;
// Direct terms summed for the power kind before switching to Euler-Maclaurin.
constexpr std::int64_t kPowerDirectTerms = 1000;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_index(std::int64_t k) {
  if (k < 1) throw std::domain_error("psi index must be >= 1, got " + std::to_string(k));
}

// Neumaier compensated accumulator.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double log_factorial_inverse(std::int64_t k) { return -std::lgamma(static_cast<double>(k) + 1.0); }

// alpha k^r with the exponent formed through logs, so that k^r never overflows
// on its own.
double gaussian_exponent(const GaussianExp& g, double k) {
  const double log_e = std::log(g.alpha) + g.r * std::log(k);
  if (log_e > std::log(std::numeric_limits<double>::max())) return kInf;
  return g.alpha * std::pow(k, g.r);
}

// log psi(k), -inf past the end of a table.
double log_psi(const PsiSequence& seq, std::int64_t k) {
  const double kd = static_cast<double>(k);
  return std::visit(
      Overloaded{
          [&](const GaussianExp& g) { return -gaussian_exponent(g, kd); },
          [&](const PowerLaw& p) { return -p.r * std::log(kd); },
          [&](const Factorial&) { return log_factorial_inverse(k); },
          [&](const TablePsi& t) {
            return static_cast<std::size_t>(k) <= t.values.size() ? std::log(t.values[k - 1]) : -kInf;
          },
      },
      seq.kind());
}

// (k+1)^r - k^r without cancellation for large k.
double power_increment(double k, double r) { return std::pow(k, r) * std::expm1(r * std::log1p(1.0 / k)); }

double log_ratio_gaussian(const GaussianExp& g, std::int64_t k) {
  return -g.alpha * power_increment(static_cast<double>(k), g.r);
}

// Integral comparison for the decreasing gaussian kind:
// sum_{k>n} psi(k) <= int_n^inf exp(-alpha x^r) dx = Gamma(s, y) / (r alpha^s)
// with s = 1/r, y = alpha n^r, and Gamma(s, y) <= y^{s-1} e^{-y} max(1, y/(y-s+1)).
double gaussian_integral_bound(const GaussianExp& g, std::int64_t n) {
  const double s = 1.0 / g.r;
  const double y = gaussian_exponent(g, static_cast<double>(n));
  if (std::isinf(y)) return 0.0;
  double log_gamma_upper = (s - 1.0) * std::log(y) - y;
  if (s > 1.0) {
    if (y <= s - 1.0) return kInf;
    log_gamma_upper += std::log(y / (y - (s - 1.0)));
  }
  return std::exp(log_gamma_upper - std::log(g.r) - s * std::log(g.alpha));
}

// psi(n) eps / (1 - eps) evaluated in logs; inf when eps >= 1.
double ratio_bound(double log_psi_n, double eps) {
  if (!(eps < 1.0)) return kInf;
  if (eps == 0.0) return 0.0;
  return std::exp(log_psi_n + std::log(eps) - std::log1p(-eps));
}

// exp(log_scale) * sum_{k>n} k^{-r}.
double power_tail_scaled(double r, std::int64_t n, double log_scale) {
  Accumulator acc;
  const std::int64_t m = n + 1 + kPowerDirectTerms;
  for (std::int64_t k = n + 1; k < m; ++k) {
    const double kd = static_cast<double>(k);
    const double term = std::exp(log_scale - r * std::log(kd));
    acc.add(term);
    // Remainder after k is at most int_k^inf x^{-r} dx = term * k / (r - 1).
    if (term * kd / (r - 1.0) <= kTailRelThreshold * acc.value()) return acc.value();
  }
  // Euler-Maclaurin for sum_{k>=m} k^{-r}.
  const double md = static_cast<double>(m);
  const double f = std::exp(log_scale - r * std::log(md));
  const double inv = 1.0 / md;
  acc.add(f * md / (r - 1.0));
  acc.add(0.5 * f);
  acc.add(f * r * inv / 12.0);
  acc.add(-f * r * (r + 1) * (r + 2) * inv * inv * inv / 720.0);
  acc.add(f * r * (r + 1) * (r + 2) * (r + 3) * (r + 4) * std::pow(inv, 5) / 30240.0);
  return acc.value();
}

double table_tail(const TablePsi& t, std::int64_t n) {
  Accumulator acc;
  for (std::size_t k = static_cast<std::size_t>(n) + 1; k <= t.values.size(); ++k) acc.add(t.values[k - 1]);
  return acc.value();
}

}  // namespace

PsiSequence PsiSequence::gaussian_exponential(double alpha, double r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("gaussian_exponential: alpha must be a positive finite real");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("gaussian_exponential: r must be a positive finite real");
  return PsiSequence(GaussianExp{alpha, r});
}

PsiSequence PsiSequence::power(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) throw std::domain_error("power: r must exceed 1 for summability");
  return PsiSequence(PowerLaw{r});
}

PsiSequence PsiSequence::factorial() { return PsiSequence(Factorial{}); }

PsiSequence PsiSequence::table(std::vector<double> values) {
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v)) throw std::domain_error("table: entries must be positive finite reals");
  return PsiSequence(TablePsi{std::move(values)});
}

bool PsiSequence::has_vanishing_ratio() const noexcept {
  if (const auto* g = std::get_if<GaussianExp>(&kind_)) return g->r > 1.0;
  return std::holds_alternative<Factorial>(kind_);
}

PsiSample psi_sample(const PsiSequence& seq, std::int64_t k) {
  require_index(k);
  double value = 0.0;
  if (std::holds_alternative<Factorial>(seq.kind()) && k <= 20) {
    double f = 1.0;
    for (std::int64_t j = 2; j <= k; ++j) f *= static_cast<double>(j);
    value = 1.0 / f;
  } else if (const auto* p = std::get_if<PowerLaw>(&seq.kind())) {
    value = std::pow(static_cast<double>(k), -p->r);
  } else if (const auto* t = std::get_if<TablePsi>(&seq.kind())) {
    // Past the end of a table the value is an exact zero, not an underflow.
    return {static_cast<std::size_t>(k) <= t->values.size() ? t->values[k - 1] : 0.0, false};
  } else {
    value = std::exp(log_psi(seq, k));
  }
  if (value < kMinNormal) return {0.0, true};
  return {value, false};
}

double psi_value(const PsiSequence& seq, std::int64_t k) { return psi_sample(seq, k).value; }

double psi_ratio(const PsiSequence& seq, std::int64_t k) {
  require_index(k);
  return std::visit(
      Overloaded{
          [&](const GaussianExp& g) { return std::exp(log_ratio_gaussian(g, k)); },
          [&](const PowerLaw& p) {
            const double kd = static_cast<double>(k);
            return std::pow(kd / (kd + 1.0), p.r);
          },
          [&](const Factorial&) { return 1.0 / (static_cast<double>(k) + 1.0); },
          [&](const TablePsi& t) {
            const auto size = static_cast<std::int64_t>(t.values.size());
            if (k > size) throw std::domain_error("psi_ratio: psi(k) is zero past the table end");
            return k == size ? 0.0 : t.values[k] / t.values[k - 1];
          },
      },
      seq.kind());
}

double epsilon_n(const PsiSequence& seq, std::int64_t n) {
  if (n < 1) throw std::domain_error("epsilon_n: n must be >= 1");
  return std::visit(Overloaded{
                        [&](const GaussianExp& g) { return g.r >= 1.0 ? psi_ratio(seq, n) : 1.0; },
                        [&](const PowerLaw&) { return 1.0; },
                        [&](const Factorial&) { return psi_ratio(seq, n); },
                        [&](const TablePsi& t) {
                          const auto size = static_cast<std::int64_t>(t.values.size());
                          if (size < n + 1)
                            throw std::domain_error("epsilon_n: table has fewer than n+1 entries");
                          double sup = 0.0;
                          for (std::int64_t k = n; k < size; ++k) sup = std::max(sup, psi_ratio(seq, k));
                          return sup;
                        },
                    },
                    seq.kind());
}

double tail_upper_bound(const PsiSequence& seq, std::int64_t n) {
  if (n < 0) throw std::domain_error("tail_upper_bound: n must be >= 0");
  if (n == 0) return psi_value(seq, 1) + tail_upper_bound(seq, 1);
  return std::visit(
      Overloaded{
          [&](const GaussianExp& g) {
            double bound = gaussian_integral_bound(g, n);
            if (g.r >= 1.0) bound = std::min(bound, ratio_bound(log_psi(seq, n), psi_ratio(seq, n)));
            return bound;
          },
          [&](const PowerLaw& p) {
            // sum_{k>n} k^{-r} < (n+1)^{-r} + int_{n+1}^inf t^{-r} dt
            const double m = static_cast<double>(n) + 1.0;
            return std::exp(-p.r * std::log(m)) * (1.0 + m / (p.r - 1.0));
          },
          [&](const Factorial&) { return ratio_bound(log_psi(seq, n), psi_ratio(seq, n)); },
          [&](const TablePsi& t) { return table_tail(t, n); },
      },
      seq.kind());
}

double psi_tail_sum(const PsiSequence& seq, std::int64_t n, TailMode mode) {
  if (n < 0) throw std::domain_error("psi_tail_sum: n must be >= 0");
  if (mode == TailMode::certified_bound) {
    if (n == 0) return psi_value(seq, 1) + psi_tail_sum(seq, 1, mode);
    if (const auto* t = std::get_if<TablePsi>(&seq.kind()); t && static_cast<std::size_t>(n) >= t->values.size())
      return 0.0;
    const double eps = epsilon_n(seq, n);
    if (!(eps < 1.0)) throw std::domain_error("psi_tail_sum: certified bound needs eps_n < 1");
    return ratio_bound(log_psi(seq, n), eps);
  }

  if (const auto* t = std::get_if<TablePsi>(&seq.kind())) return table_tail(*t, n);
  if (const auto* p = std::get_if<PowerLaw>(&seq.kind())) return power_tail_scaled(p->r, n, 0.0);

  Accumulator acc;
  for (std::int64_t k = n + 1;; ++k) {
    const double term = psi_value(seq, k);
    if (term == 0.0) break;
    acc.add(term);
    const double limit = kTailRelThreshold * acc.value();
    if (term <= limit && tail_upper_bound(seq, k) <= limit) break;
    if (k - n > kMaxTailTerms) throw std::runtime_error("psi_tail_sum: direct summation did not converge");
  }
  return acc.value();
}

PowerTailFactor power_tail_factor(double r, std::int64_t n) {
  if (!(r > 1.0)) throw std::domain_error("power_tail_factor: r must exceed 1");
  if (n < 1) throw std::domain_error("power_tail_factor: n must be >= 1");
  const double m = static_cast<double>(n) + 1.0;
  return {std::exp(-r / m) * (1.0 + m / (r - 1.0)), power_tail_scaled(r, n, r * std::log(static_cast<double>(n)))};
}

BetaSequence BetaSequence::constant(double beta) {
  if (!std::isfinite(beta)) throw std::domain_error("beta must be finite");
  return BetaSequence({beta}, Extension::hold);
}

BetaSequence BetaSequence::table(std::vector<double> values, Extension ext) {
  if (values.empty()) throw std::domain_error("beta table must not be empty");
  for (double v : values)
    if (!std::isfinite(v)) throw std::domain_error("beta table entries must be finite");
  return BetaSequence(std::move(values), ext);
}

double BetaSequence::operator()(std::int64_t k) const {
  require_index(k);
  const auto idx = static_cast<std::size_t>(k - 1);
  if (ext_ == Extension::periodic) return values_[idx % values_.size()];
  return values_[std::min(idx, values_.size() - 1)];
}

std::int64_t truncation_index(const PsiSequence& psi, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("truncation_index: tol must be positive");
  auto ok = [&](std::int64_t k) { return tail_upper_bound(psi, k) < tol; };
  if (ok(0)) return 0;
  std::int64_t hi = 1;
  while (!ok(hi)) {
    if (hi > (std::int64_t{1} << 40)) throw std::runtime_error("truncation_index: tail bound never drops below tol");
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // fails (or is 0, which failed above)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

double kernel_eval(const Kernel& kernel, double t, double tol) {
  const std::int64_t cutoff = truncation_index(kernel.psi, tol);
  Accumulator acc;
  for (std::int64_t k = 1; k <= cutoff; ++k) {
    const double c = psi_value(kernel.psi, k);
    if (c == 0.0) continue;
    acc.add(c * std::cos(static_cast<double>(k) * t - M_PI * kernel.beta(k) / 2.0));
  }
  return acc.value();
}

}  // namespace trigint
