#include "trigint/interpolation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trigint {
namespace {

void require_order(int n) {
  if (n < 1) throw std::domain_error("interpolation: n must be >= 1, got " + std::to_string(n));
}

}  // namespace

NodeSet nodes(int n) {
  require_order(n);
  const int count = 2 * n - 1;
  NodeSet set{n, std::vector<double>(static_cast<std::size_t>(count))};
  for (int k = 0; k < count; ++k) set.nodes[k] = 2.0 * M_PI * k / count;
  return set;
}

TrigPolynomial interpolate(int n, std::span<const double> samples) {
  require_order(n);
  const std::size_t count = 2 * static_cast<std::size_t>(n) - 1;
  if (samples.size() != count)
    throw std::domain_error("interpolate: expected " + std::to_string(count) + " samples, got " +
                            std::to_string(samples.size()));

  // cos/sin of 2 pi m / count for every residue m, so cos(j x_k) is a lookup
  // at (j k) mod count.
  std::vector<double> cos_tab(count), sin_tab(count);
  for (std::size_t m = 0; m < count; ++m) {
    const double angle = 2.0 * M_PI * static_cast<double>(m) / static_cast<double>(count);
    cos_tab[m] = std::cos(angle);
    sin_tab[m] = std::sin(angle);
  }

  const double scale = 2.0 / static_cast<double>(count);
  TrigPolynomial poly;
  poly.n = n;
  poly.a.assign(n - 1, 0.0);
  poly.b.assign(n - 1, 0.0);
  double s0 = 0.0;
  for (double y : samples) s0 += y;
  poly.a0 = scale * s0;
  for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
    double sa = 0.0, sb = 0.0;
    std::size_t idx = 0;  // (j k) mod count
    for (std::size_t k = 0; k < count; ++k) {
      sa += samples[k] * cos_tab[idx];
      sb += samples[k] * sin_tab[idx];
      idx += j;
      if (idx >= count) idx -= count;
    }
    poly.a[j - 1] = scale * sa;
    poly.b[j - 1] = scale * sb;
  }
  return poly;
}

double eval_poly(const TrigPolynomial& poly, double x) {
  // Clenshaw-style backward recurrence on cos kx, sin kx.
  const double c = std::cos(x);
  const double two_c = 2.0 * c;
  double u1 = 0.0, u2 = 0.0;  // cosine part
  double v1 = 0.0, v2 = 0.0;  // sine part
  for (std::size_t k = poly.a.size(); k >= 1; --k) {
    const double u0 = poly.a[k - 1] + two_c * u1 - u2;
    const double v0 = poly.b[k - 1] + two_c * v1 - v2;
    u2 = u1;
    u1 = u0;
    v2 = v1;
    v1 = v0;
  }
  // sum a_k cos kx = u1 cos x - u2, sum b_k sin kx = v1 sin x
  return 0.5 * poly.a0 + (u1 * c - u2) + v1 * std::sin(x);
}

std::vector<double> sample_at_nodes(const TrigPolynomial& poly) {
  const NodeSet set = nodes(poly.n);
  std::vector<double> out;
  out.reserve(set.nodes.size());
  for (double x : set.nodes) out.push_back(eval_poly(poly, x));
  return out;
}

FoldedFrequency fold_frequency(std::int64_t nu, int n) {
  require_order(n);
  if (nu < n) throw std::domain_error("fold_frequency: nu must be >= n");
  const std::int64_t period = 2 * static_cast<std::int64_t>(n) - 1;
  // Nearest multiple of the (odd) period; no ties can occur.
  const std::int64_t m = (nu + (n - 1)) / period;
  return {m, nu - m * period};
}

void to_json(nlohmann::json& j, const TrigPolynomial& p) {
  j = nlohmann::json{{"n", p.n}, {"a0", p.a0}, {"a", p.a}, {"b", p.b}};
}

void from_json(const nlohmann::json& j, TrigPolynomial& p) {
  j.at("n").get_to(p.n);
  j.at("a0").get_to(p.a0);
  j.at("a").get_to(p.a);
  j.at("b").get_to(p.b);
  if (p.n < 1 || p.a.size() != static_cast<std::size_t>(p.n - 1) || p.b.size() != p.a.size())
    throw std::domain_error("TrigPolynomial json: coefficient arrays must have length n-1");
}

}  // namespace trigint
