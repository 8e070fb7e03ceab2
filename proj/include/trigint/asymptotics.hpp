#pragma once

// Closed-form and quadrature-backed asymptotic quantities for the
// interpolation error: the oscillatory envelope Phi_{n,theta}, the two-sided
// bracket on A_n(p), the leading constant, error predictions for the
// gaussian-exponential and power classes, and Favard constants.

#include <cstdint>

#include "trigint/norms.hpp"
#include "trigint/sequences.hpp"

namespace trigint {

/// Phi_{n,theta}(x) = cos(nx - theta/2) g(x) + sin(nx - theta/2) h(x),
/// g(x) = 1 - cos(x - theta), h(x) = -sin(x - theta).
struct PhiWave {
  int n;
  double theta;

  [[nodiscard]] double operator()(double x) const;
  /// 2 sin((2n-1)x/2) sin((theta-x)/2), the same function in product form.
  [[nodiscard]] double product_form(double x) const;
};

/// Constants of the amplitude-modulated norm asymptotics instantiated for
/// g_theta, h_theta (Hoelder constant K = 1).
namespace envelope_bounds {
/// r_theta(x) = sqrt(g^2 + h^2) = 2 |sin((x - theta)/2)|.
[[nodiscard]] double r_theta(double x, double theta);
/// Total variation of r_theta^p over one period: 2^{p+1}.
[[nodiscard]] double variation_rp(double p);
/// ||r_theta||_p = 2 ||cos||_p.
[[nodiscard]] double r_theta_norm(PNorm p);
/// M_1 = 8, M_inf = 1, otherwise 1 + 4 / (p ||cos||_p^{p-1}) <= 9.
[[nodiscard]] double error_constant(PNorm p);
}  // namespace envelope_bounds

/// lim_n ||Phi_{n,theta}||_p = 2^{1-1/p} pi^{-1/p} ||cos||_p^2.
[[nodiscard]] double phi_wave_limit(PNorm p);

/// ||Phi_{n,theta}||_p by quadrature on a grid adapted to n.
[[nodiscard]] double phi_wave_norm(int n, double theta, PNorm p, const QuadratureConfig& cfg = {});

struct AnBracket {
  double lower;        ///< ||Phi_{n, pi beta_n}||_p / 2
  double upper;        ///< sup_theta ||Phi_{n,theta}||_p / 2 (numerical)
  double theta_upper;  ///< maximizing theta in [0, 2 pi)
};

/// Lower endpoint at theta = pi beta_n; upper by a 4n-point theta grid
/// (at least 16) and golden-section refinement around the best 3 grid peaks.
[[nodiscard]] AnBracket an_bracket(int n, double beta_n, PNorm p, const QuadratureConfig& cfg = {});

/// 2^{1-1/p} pi^{-(1+1/p)} ||cos||_p^2.
[[nodiscard]] double main_constant(PNorm p);

inline constexpr double kDefaultSlackConstant = 10.0;

/// main is the leading term; slack is a reporting envelope built from an
/// unspecified O(1) factor, never a proven bound.
struct ErrorPrediction {
  double main;
  double slack;
};

/// main = main_constant(p) psi(n); slack = C psi(n) (1/n + eps_n/(1-eps_n)),
/// or C (psi(n)/n + tail) when eps_n >= 1 or is unavailable.
[[nodiscard]] ErrorPrediction predict_error(const PsiSequence& seq, std::int64_t n, PNorm p,
                                            double slack_constant = kDefaultSlackConstant);

struct Theorem2Check {
  bool admissible;     ///< n^{1-r} ln(n+1) <= alpha r
  double eps_n;        ///< exp(-alpha((n+1)^r - n^r))
  double ratio_term;   ///< eps_n / (1 - eps_n)
  double bound;        ///< 2/n
  bool holds;          ///< !admissible || ratio_term <= bound
};

[[nodiscard]] Theorem2Check theorem2_check(double alpha, double r, std::int64_t n);

/// psi(k) = k^{-r}: main = main_constant(p) n^{-r};
/// slack = C n^{-r} (1/n + e^{-r/(n+1)} (1 + n/(r-1))), dropping the last
/// factor once r >= n+1.
[[nodiscard]] ErrorPrediction theorem3_prediction(double r, std::int64_t n, PNorm p,
                                                  double slack_constant = kDefaultSlackConstant);

/// K_m = (4/pi) sum_{nu>=0} (-1)^{nu(m+1)} / (2nu+1)^{m+1} to absolute accuracy ~tol.
[[nodiscard]] double favard(int m, double tol = 1e-14);

/// 2 K_{r-1} ln n / (pi n^r); comparator for W^r_1 in L_1. Requires r >= 1, n >= 2.
[[nodiscard]] double motornyi_main_term(int r, std::int64_t n);

}  // namespace trigint
