#pragma once

// Coefficient sequences psi(k), phase sequences beta_k and the generating
// kernel Psi(t) = sum_k psi(k) cos(k t - pi beta_k / 2).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace trigint {

/// psi(k) = exp(-alpha k^r), alpha > 0, r > 0.
struct GaussianExp {
  double alpha;
  double r;
};

/// psi(k) = k^{-r}, r > 1 (Weyl-Nagy classes).
struct PowerLaw {
  double r;
};

/// psi(k) = 1 / k!.
struct Factorial {};

/// psi(k) = values[k-1] for k within the table, exact zero beyond it.
struct TablePsi {
  std::vector<double> values;
};

/// A positive, summable coefficient sequence. Construct through the named
/// factories; they reject parameters that leave the sequence non-summable.
class PsiSequence {
 public:
  using Kind = std::variant<GaussianExp, PowerLaw, Factorial, TablePsi>;

  [[nodiscard]] static PsiSequence gaussian_exponential(double alpha, double r);
  [[nodiscard]] static PsiSequence power(double r);
  [[nodiscard]] static PsiSequence factorial();
  [[nodiscard]] static PsiSequence table(std::vector<double> values);

  [[nodiscard]] const Kind& kind() const noexcept { return kind_; }

  /// True when psi(k+1)/psi(k) decreases strictly to zero (gaussian with
  /// r > 1, factorial). Tables are never reported as satisfying it.
  [[nodiscard]] bool has_vanishing_ratio() const noexcept;

 private:
  explicit PsiSequence(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// A coefficient value together with whether it was flushed to zero because
/// the true value lies below the smallest normal double.
struct PsiSample {
  double value = 0.0;
  bool underflow = false;
};

[[nodiscard]] PsiSample psi_sample(const PsiSequence& seq, std::int64_t k);

/// psi(k) for k >= 1; throws std::domain_error for k < 1. Values below the
/// smallest normal double come back as exact 0 (see psi_sample for the flag).
[[nodiscard]] double psi_value(const PsiSequence& seq, std::int64_t k);

/// psi(k+1)/psi(k), formed in log-domain for the gaussian kind. Zero past the
/// end of a table; throws std::domain_error when psi(k) itself is zero.
[[nodiscard]] double psi_ratio(const PsiSequence& seq, std::int64_t k);

/// sup_{k>=n} psi(k+1)/psi(k).
///
/// Ratios decrease for gaussian (r >= 1) and factorial, so the sup is the
/// ratio at n. For power and gaussian with r < 1 the ratios increase to 1 and
/// the sup is exactly 1. Tables need at least n+1 entries.
[[nodiscard]] double epsilon_n(const PsiSequence& seq, std::int64_t n);

enum class TailMode { exact_partial, certified_bound };

/// Relative stopping threshold of exact_partial summation.
inline constexpr double kTailRelThreshold = 1e-16;

/// sum_{k>n} psi(k).
///
/// certified_bound returns psi(n) eps_n / (1 - eps_n) and throws
/// std::domain_error when eps_n >= 1. exact_partial sums directly until both
/// the increment and a proven bound on the omitted remainder drop below
/// kTailRelThreshold relative to the running sum; the power kind adds an
/// Euler-Maclaurin remainder after a fixed number of terms.
[[nodiscard]] double psi_tail_sum(const PsiSequence& seq, std::int64_t n,
                                  TailMode mode = TailMode::exact_partial);

/// The tightest proven upper bound on sum_{k>n} psi(k) available for the
/// kind: the ratio bound when eps_n < 1, the integral comparison for power
/// and slowly decaying gaussians, the exact sum for tables. +inf when no
/// bound applies at this n.
[[nodiscard]] double tail_upper_bound(const PsiSequence& seq, std::int64_t n);

struct PowerTailFactor {
  double bound;   ///< e^{-r/(n+1)} (1 + (n+1)/(r-1))
  double actual;  ///< n^r sum_{k>n} k^{-r}
};

/// Both sides of n^r sum_{k>n} k^{-r} < e^{-r/(n+1)} (1 + (n+1)/(r-1)).
[[nodiscard]] PowerTailFactor power_tail_factor(double r, std::int64_t n);

enum class Extension { periodic, hold };

/// Phase sequence beta_k, k >= 1. A table repeats itself (periodic) or keeps
/// its last value (hold) past its end.
class BetaSequence {
 public:
  [[nodiscard]] static BetaSequence constant(double beta);
  [[nodiscard]] static BetaSequence table(std::vector<double> values,
                                          Extension ext = Extension::periodic);

  [[nodiscard]] double operator()(std::int64_t k) const;

  [[nodiscard]] bool is_constant() const noexcept { return values_.size() == 1; }

 private:
  BetaSequence(std::vector<double> values, Extension ext)
      : values_(std::move(values)), ext_(ext) {}
  std::vector<double> values_;
  Extension ext_;
};

struct Kernel {
  PsiSequence psi;
  BetaSequence beta;
};

/// Smallest K >= 0 with tail_upper_bound(psi, K) < tol, located by doubling
/// and then bisection.
[[nodiscard]] std::int64_t truncation_index(const PsiSequence& psi, double tol);

/// Psi(t) to absolute accuracy tol.
[[nodiscard]] double kernel_eval(const Kernel& kernel, double t, double tol);

/// Thrown for malformed sequence spec strings. The message names the
/// offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "exp:alpha=1,r=2", "pow:r=3", "factorial", "table:1,0.5,0.25".
[[nodiscard]] PsiSequence parse_psi(std::string_view spec);

/// "const:0.5", "table:0,1,0.5" with optional ";periodic" or ";hold" suffix
/// (periodic by default).
[[nodiscard]] BetaSequence parse_beta(std::string_view spec);

}  // namespace trigint
