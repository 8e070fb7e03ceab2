#include <doctest.h>

#include <cmath>
#include <random>

#include "trigint/interpolation.hpp"

using namespace trigint;

namespace {

TrigPolynomial random_poly(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  TrigPolynomial p;
  p.n = n;
  p.a0 = coef(rng);
  for (int k = 1; k < n; ++k) {
    p.a.push_back(coef(rng));
    p.b.push_back(coef(rng));
  }
  return p;
}

double max_coef_diff(const TrigPolynomial& x, const TrigPolynomial& y) {
  double d = std::abs(x.a0 - y.a0);
  for (std::size_t k = 0; k < x.a.size(); ++k)
    d = std::max({d, std::abs(x.a[k] - y.a[k]), std::abs(x.b[k] - y.b[k])});
  return d;
}

}  // namespace

TEST_CASE("nodes") {
  CHECK(nodes(1).nodes == std::vector<double>{0.0});
  const auto n2 = nodes(2).nodes;
  REQUIRE(n2.size() == 3);
  CHECK(n2[1] == doctest::Approx(2 * M_PI / 3));
  CHECK(n2[2] == doctest::Approx(4 * M_PI / 3));
  const auto n3 = nodes(3).nodes;
  REQUIRE(n3.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(n3[k] == doctest::Approx(2 * M_PI * k / 5));
  CHECK_THROWS_AS((void)nodes(0), std::domain_error);

  for (int n : {1, 2, 7, 100}) {
    const auto set = nodes(n);
    CHECK(set.nodes.size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(set.nodes.front() == 0.0);
    CHECK(set.nodes.back() < 2 * M_PI);
    for (std::size_t i = 1; i < set.nodes.size(); ++i) CHECK(set.nodes[i] > set.nodes[i - 1]);
  }
}

TEST_CASE("interpolate examples") {
  const auto x = nodes(2).nodes;

  const double c = 1.75;
  const TrigPolynomial constant = interpolate(2, std::vector<double>(3, c));
  CHECK(constant.a0 / 2 == doctest::Approx(c).epsilon(1e-15));
  CHECK(std::abs(constant.a[0]) < 1e-15);
  CHECK(std::abs(constant.b[0]) < 1e-15);

  std::vector<double> cos1, cos2;
  for (double xk : x) {
    cos1.push_back(std::cos(xk));
    cos2.push_back(std::cos(2 * xk));
  }
  const TrigPolynomial p1 = interpolate(2, cos1);
  CHECK(p1.a[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(p1.a0) < 1e-15);
  CHECK(std::abs(p1.b[0]) < 1e-15);

  // cos(2 x_k) = cos(x_k) at the three nodes, so cos 2x aliases onto cos x.
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(cos2[k] == doctest::Approx(cos1[k]).epsilon(1e-15));
  const TrigPolynomial p2 = interpolate(2, cos2);
  CHECK(max_coef_diff(p1, p2) < 1e-14);

  CHECK_THROWS_AS((void)interpolate(2, std::vector<double>(4, 0.0)), std::domain_error);
}

TEST_CASE("eval_poly") {
  TrigPolynomial zero{3, 0.0, {0.0, 0.0}, {0.0, 0.0}};
  CHECK(eval_poly(zero, 1.234) == 0.0);
  TrigPolynomial cosine{2, 0.0, {1.0}, {0.0}};
  CHECK(std::abs(eval_poly(cosine, M_PI / 2)) < 1e-16);
  TrigPolynomial constant{4, 2.0, {0, 0, 0}, {0, 0, 0}};
  CHECK(eval_poly(constant, -3.0) == 1.0);

  std::mt19937_64 rng(7);
  const TrigPolynomial p = random_poly(20, rng);
  for (double x : {-2.0, 0.0, 0.3, 3.1, 5.9}) {
    CHECK(std::abs(eval_poly(p, x) - eval_poly(p, x + 2 * M_PI)) < 1e-12);
    double direct = p.a0 / 2;
    for (int k = 1; k < p.n; ++k) direct += p.a[k - 1] * std::cos(k * x) + p.b[k - 1] * std::sin(k * x);
    CHECK(std::abs(eval_poly(p, x) - direct) < 1e-12);
  }
}

TEST_CASE("interpolation reproduces trig polynomials of order <= n-1") {
  std::mt19937_64 rng(20240601);
  for (int n : {2, 5, 16, 64}) {
    for (int trial = 0; trial < 200; ++trial) {
      const TrigPolynomial p = random_poly(n, rng);
      const TrigPolynomial q = interpolate(n, sample_at_nodes(p));
      CHECK(max_coef_diff(p, q) < 1e-10);
    }
  }
}

TEST_CASE("interpolation matches samples and is a projection") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n : {1, 3, 8, 33}) {
    std::vector<double> samples(2 * n - 1);
    for (double& s : samples) s = u(rng);
    const TrigPolynomial p = interpolate(n, samples);
    const auto back = sample_at_nodes(p);
    double scale = 0.0, worst = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      scale = std::max(scale, std::abs(samples[k]));
      worst = std::max(worst, std::abs(back[k] - samples[k]));
    }
    CHECK(worst <= 1e-12 * scale);
    CHECK(max_coef_diff(interpolate(n, back), p) < 1e-12);
  }
}

TEST_CASE("perturbing one coefficient breaks some node match") {
  std::mt19937_64 rng(5);
  const int n = 6;
  const TrigPolynomial p = interpolate(n, sample_at_nodes(random_poly(n, rng)));
  const auto base = sample_at_nodes(p);
  for (int slot = 0; slot < 2 * n - 1; ++slot) {
    TrigPolynomial q = p;
    if (slot == 0)
      q.a0 += 1e-6;
    else if (slot < n)
      q.a[slot - 1] += 1e-6;
    else
      q.b[slot - n] += 1e-6;
    const auto moved = sample_at_nodes(q);
    double worst = 0.0;
    for (std::size_t k = 0; k < base.size(); ++k) worst = std::max(worst, std::abs(moved[k] - base[k]));
    CHECK(worst > 1e-8);
  }
}

TEST_CASE("fold_frequency") {
  CHECK(fold_frequency(2, 2).m == 1);
  CHECK(fold_frequency(2, 2).k == -1);
  for (int n : {1, 2, 5, 40}) {
    CHECK(fold_frequency(2 * n - 1, n).m == 1);
    CHECK(fold_frequency(2 * n - 1, n).k == 0);
    if (n >= 2) {
      CHECK(fold_frequency(n, n).m == 1);
      CHECK(fold_frequency(n, n).k == 1 - n);
    }
    for (std::int64_t nu = n; nu < 12 * n; ++nu) {
      const FoldedFrequency f = fold_frequency(nu, n);
      CHECK(f.m >= 1);
      CHECK(std::abs(f.k) <= n - 1);
      CHECK(f.m * (2 * n - 1) + f.k == nu);
    }
  }
  CHECK_THROWS_AS((void)fold_frequency(1, 2), std::domain_error);
}

TEST_CASE("aliasing law at the nodes") {
  for (int n : {2, 5, 16}) {
    const auto x = nodes(n).nodes;
    for (std::int64_t nu = n; nu <= 10 * n; ++nu) {
      const auto f = fold_frequency(nu, n);
      for (double phase : {0.0, 0.7, -2.1}) {
        double worst = 0.0;
        for (double xj : x)
          worst = std::max(worst, std::abs(std::cos(static_cast<double>(nu) * xj + phase) -
                                           std::cos(static_cast<double>(f.k) * xj + phase)));
        CHECK(worst < 1e-11);
      }
    }
  }
}

TEST_CASE("TrigPolynomial json") {
  std::mt19937_64 rng(3);
  const TrigPolynomial p = random_poly(4, rng);
  const nlohmann::json j = p;
  CHECK(j.at("n") == 4);
  CHECK(j.at("a").size() == 3);
  CHECK(nlohmann::json::parse(j.dump()).get<TrigPolynomial>() == p);
  CHECK_THROWS((void)nlohmann::json::parse(R"({"n":3,"a0":0,"a":[1],"b":[1]})").get<TrigPolynomial>());
}
