#pragma once

// L_p norms over one period [0, 2 pi], without the 1/(2 pi) normalization:
// ||f||_p = (int_0^{2pi} |f|^p)^{1/p}, ||f||_inf = max |f|.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigint {

/// Exponent p >= 1 or infinity.
class PNorm {
 public:
  /// Throws std::domain_error unless p >= 1 (p = +inf is accepted).
  explicit PNorm(double p);
  [[nodiscard]] static PNorm infinity();

  [[nodiscard]] bool is_infinite() const noexcept;
  [[nodiscard]] double value() const noexcept { return p_; }
  /// 1/p, zero at infinity.
  [[nodiscard]] double inverse() const noexcept;

  /// "inf" or the shortest decimal that round-trips.
  [[nodiscard]] std::string to_string() const;
  /// Accepts "inf" or a decimal >= 1.
  [[nodiscard]] static PNorm parse(const std::string& text);

  friend bool operator==(PNorm, PNorm) = default;
  friend auto operator<=>(PNorm, PNorm) = default;

 private:
  double p_;
};

struct QuadratureConfig {
  int base_points = 4096;
  int refinement_limit = 4;  ///< maximum number of grid doublings
  double rel_tol = 1e-9;

  /// Throws std::domain_error if base_points < 16 or the other fields are
  /// not positive.
  void validate() const;
};

/// Copy of cfg with base_points raised to at least 64 n, enough to resolve
/// functions oscillating at frequency ~n.
[[nodiscard]] QuadratureConfig adapted_to(QuadratureConfig cfg, int n);

using PeriodicFunction = std::function<double(double)>;

/// Finite p: periodic trapezoid rule on |f|^p, doubling the node count until
/// successive values agree to rel_tol or refinement_limit is reached.
/// p = inf: maximum over the finest grid, refined by a parabolic fit around
/// each of the five largest grid maxima.
/// Throws std::runtime_error if f returns a non-finite value.
[[nodiscard]] double lp_norm(const PeriodicFunction& f, PNorm p, const QuadratureConfig& cfg = {});

/// Values of a periodic function at 2 pi i / points, i = 0 .. points-1.
using GridSampler = std::function<std::vector<double>(int points)>;

/// lp_norm with whole grids supplied by grid (for functions that are cheaper
/// to sample on a uniform grid than pointwise). f must be the same function;
/// only the p = inf refinement evaluates it off the grid.
[[nodiscard]] double lp_norm(const GridSampler& grid, const PeriodicFunction& f, PNorm p,
                             const QuadratureConfig& cfg = {});

/// ||cos||_p in closed form: (2 sqrt(pi) Gamma((p+1)/2) / Gamma(p/2+1))^{1/p}, 1 at p = inf.
[[nodiscard]] double cos_norm(PNorm p);

}  // namespace trigint
