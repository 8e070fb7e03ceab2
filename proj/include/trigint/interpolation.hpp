#pragma once

// Trigonometric interpolation on the 2n-1 equidistant nodes x_k = 2k pi/(2n-1).

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace trigint {

struct NodeSet {
  int n = 0;
  std::vector<double> nodes;  ///< x_k = 2k pi/(2n-1), k = 0..2n-2
};

/// a0/2 + sum_{k=1}^{n-1} (a_k cos kx + b_k sin kx); a[k-1] holds a_k.
struct TrigPolynomial {
  int n = 1;
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  [[nodiscard]] int order() const noexcept { return n - 1; }
  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;
};

/// nu = m (2n-1) + k with m >= 1 and |k| <= n-1.
struct FoldedFrequency {
  std::int64_t m = 0;
  std::int64_t k = 0;
};

[[nodiscard]] NodeSet nodes(int n);

/// The unique order-(n-1) trig polynomial through (x_k, samples[k]).
/// Coefficients are plain O(n^2) discrete Fourier sums with the angles reduced
/// exactly modulo 2n-1.
[[nodiscard]] TrigPolynomial interpolate(int n, std::span<const double> samples);

[[nodiscard]] double eval_poly(const TrigPolynomial& poly, double x);

/// Samples of poly at nodes(poly.n).
[[nodiscard]] std::vector<double> sample_at_nodes(const TrigPolynomial& poly);

[[nodiscard]] FoldedFrequency fold_frequency(std::int64_t nu, int n);

void to_json(nlohmann::json& j, const TrigPolynomial& p);
void from_json(const nlohmann::json& j, TrigPolynomial& p);

}  // namespace trigint
