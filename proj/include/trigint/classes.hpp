#pragma once

// Members of the convolution class generated by a kernel and the extremal
// two-box density, and the analytic split of their interpolation error into a
// leading term and an aliasing remainder.

#include <vector>

#include "trigint/sequences.hpp"

namespace trigint {

/// phi(t) = 1/(2 delta) on (-delta/2, delta/2), -1/(2 delta) on
/// (pi/n - delta/2, pi/n + delta/2), zero elsewhere on the period.
/// ||phi||_1 = 1 and int phi = 0 hold by construction.
class BoxPhi {
 public:
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] double delta() const noexcept { return delta_; }
  [[nodiscard]] double height() const noexcept { return 0.5 / delta_; }
  [[nodiscard]] double second_center() const noexcept;

  /// Pointwise value, 2 pi periodic. Box endpoints (measure zero) read as 0.
  [[nodiscard]] double operator()(double t) const;

  /// int_0^{2pi} phi(t) cos(k t + c) dt = sinc(k delta/2) (cos c - cos(k pi/n + c)) / 2.
  [[nodiscard]] double cos_moment(double k, double c) const;
  /// int_0^{2pi} phi(t) sin(k t + c) dt.
  [[nodiscard]] double sin_moment(double k, double c) const;

  [[nodiscard]] static constexpr double l1_norm() noexcept { return 1.0; }
  [[nodiscard]] static constexpr double mean() noexcept { return 0.0; }

 private:
  friend BoxPhi make_box_phi(int n, double delta);
  BoxPhi(int n, double delta) : n_(n), delta_(delta) {}
  int n_;
  double delta_;
};

/// Throws std::domain_error unless n >= 1 and 0 < delta < pi/n.
[[nodiscard]] BoxPhi make_box_phi(int n, double delta);

/// sin(u)/u with sinc(0) = 1.
[[nodiscard]] double sinc(double u);

/// f(x) = a0/2 + (1/pi) int Psi(x - t) phi(t) dt for a two-box phi, evaluated
/// termwise in closed form up to a cutoff with certified accuracy tol.
class ClassFunction {
 public:
  [[nodiscard]] double operator()(double x) const;
  /// f at 2 pi i / points, i = 0 .. points-1, by folding the kept frequencies
  /// modulo points and one FFT. Agrees with operator() up to rounding.
  [[nodiscard]] std::vector<double> sample_grid(int points) const;

  [[nodiscard]] const Kernel& kernel() const noexcept { return kernel_; }
  [[nodiscard]] const BoxPhi& phi() const noexcept { return phi_; }
  [[nodiscard]] double a0() const noexcept { return a0_; }
  [[nodiscard]] double tol() const noexcept { return tol_; }
  /// Highest kernel frequency kept.
  [[nodiscard]] std::int64_t cutoff() const noexcept { return static_cast<std::int64_t>(terms_.size()); }

 private:
  friend ClassFunction class_function(const Kernel&, const BoxPhi&, double, double);
  struct Term {
    double weight;  ///< psi(k) sinc(k delta/2) / (2 pi)
    double phase;   ///< pi beta_k / 2
  };
  ClassFunction(Kernel kernel, BoxPhi phi, double a0, double tol, std::vector<Term> terms)
      : kernel_(std::move(kernel)), phi_(phi), a0_(a0), tol_(tol), terms_(std::move(terms)) {}

  Kernel kernel_;
  BoxPhi phi_;
  double a0_;
  double tol_;
  std::vector<Term> terms_;
};

/// Upper limit on the termwise cutoff; kernels whose certified tail cannot
/// reach tol within it are rejected with std::domain_error.
inline constexpr std::int64_t kMaxClassTerms = 2'000'000;

[[nodiscard]] ClassFunction class_function(const Kernel& kernel, const BoxPhi& phi, double a0, double tol);

/// f - S_{n-1}(f) = main_term + remainder for f built on a two-box phi.
class ResidualDecomposition {
 public:
  /// (2/pi) psi(n) sin((2n-1)x/2) J(x).
  [[nodiscard]] double main_term(double x) const;
  /// J(x) = int sin(n t - x/2 + pi beta_n/2) phi(t) dt = sinc(n delta/2) sin(pi beta_n/2 - x/2).
  [[nodiscard]] double inner_integral(double x) const;
  /// Aliasing remainder: frequencies nu > n paired with their folded images.
  [[nodiscard]] double remainder(double x) const;

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::int64_t cutoff() const noexcept { return static_cast<std::int64_t>(terms_.size()) + n_; }

 private:
  friend ResidualDecomposition residual_decomposition(const ClassFunction&, double);
  struct Term {
    double nu;      ///< frequency
    double folded;  ///< k of nu = m(2n-1) + k
    double weight;  ///< psi(nu) sinc(nu delta/2) / (2 pi)
    double phase;   ///< pi beta_nu / 2
  };
  ResidualDecomposition(int n, double main_weight, double main_phase, double delta, std::vector<Term> terms)
      : n_(n), main_weight_(main_weight), main_phase_(main_phase), delta_(delta), terms_(std::move(terms)) {}

  int n_;
  double main_weight_;  ///< (2/pi) psi(n)
  double main_phase_;   ///< pi beta_n / 2
  double delta_;
  std::vector<Term> terms_;
};

/// Decomposition for the interpolation order phi.n() the class function was
/// built with; the remainder is truncated with certified accuracy tol.
[[nodiscard]] ResidualDecomposition residual_decomposition(const ClassFunction& cf, double tol);

}  // namespace trigint
