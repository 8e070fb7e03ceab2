#include "trigint/classes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <string>

#include <fftw3.h>

#include "trigint/interpolation.hpp"

namespace trigint {
namespace {

std::int64_t class_cutoff(const PsiSequence& psi, double bound_tol) {
  const std::int64_t cutoff = truncation_index(psi, bound_tol);
  if (cutoff > kMaxClassTerms)
    throw std::domain_error("class_function: certified truncation needs " + std::to_string(cutoff) +
                            " terms; loosen tol for this kernel");
  return cutoff;
}

}  // namespace

double sinc(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

BoxPhi make_box_phi(int n, double delta) {
  if (n < 1) throw std::domain_error("make_box_phi: n must be >= 1");
  if (!(delta > 0.0)) throw std::domain_error("make_box_phi: delta must be positive");
  if (!(delta < M_PI / n)) throw std::domain_error("make_box_phi: boxes overlap unless delta < pi/n");
  return BoxPhi(n, delta);
}

double BoxPhi::second_center() const noexcept { return M_PI / n_; }

double BoxPhi::operator()(double t) const {
  // Reduce into [-delta/2, 2 pi - delta/2), the window the boxes are laid out on.
  const double half = 0.5 * delta_;
  double u = std::fmod(t + half, 2.0 * M_PI);
  if (u < 0.0) u += 2.0 * M_PI;
  u -= half;
  if (std::abs(u) < half) return height();
  if (std::abs(u - second_center()) < half) return -height();
  return 0.0;
}

double BoxPhi::cos_moment(double k, double c) const {
  return 0.5 * sinc(0.5 * k * delta_) * (std::cos(c) - std::cos(k * second_center() + c));
}

double BoxPhi::sin_moment(double k, double c) const {
  return 0.5 * sinc(0.5 * k * delta_) * (std::sin(c) - std::sin(k * second_center() + c));
}

ClassFunction class_function(const Kernel& kernel, const BoxPhi& phi, double a0, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("class_function: tol must be positive");
  // Each term is bounded by psi(k)/pi.
  const std::int64_t cutoff = class_cutoff(kernel.psi, M_PI * tol);
  std::vector<ClassFunction::Term> terms;
  terms.reserve(static_cast<std::size_t>(cutoff));
  for (std::int64_t k = 1; k <= cutoff; ++k) {
    const double kd = static_cast<double>(k);
    terms.push_back({psi_value(kernel.psi, k) * sinc(0.5 * kd * phi.delta()) / (2.0 * M_PI),
                     0.5 * M_PI * kernel.beta(k)});
  }
  return ClassFunction(kernel, phi, a0, tol, std::move(terms));
}

double ClassFunction::operator()(double x) const {
  const double shift = phi_.second_center();
  double sum = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const Term& t = terms_[i];
    sum += t.weight * (std::cos(k * x - t.phase) - std::cos(k * (x - shift) - t.phase));
  }
  return 0.5 * a0_ + sum;
}

std::vector<double> ClassFunction::sample_grid(int points) const {
  if (points < 1) throw std::domain_error("sample_grid: points must be >= 1");
  // Term k is Re(c_k e^{ikx}) with c_k = w e^{-i phase} (1 - e^{-ik pi/n}); on
  // the grid e^{ikx} only depends on k mod points.
  const double shift = phi_.second_center();
  const auto m = static_cast<std::size_t>(points);
  std::vector<std::complex<double>> bins(m);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const Term& t = terms_[i];
    bins[(i + 1) % m] += std::polar(t.weight, -t.phase) - std::polar(t.weight, -t.phase - k * shift);
  }

  // FFTW planning is not thread-safe; execution on a private plan is.
  static std::mutex planner;
  auto* data = reinterpret_cast<fftw_complex*>(bins.data());
  fftw_plan plan = nullptr;
  {
    const std::lock_guard lock(planner);
    plan = fftw_plan_dft_1d(points, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    const std::lock_guard lock(planner);
    fftw_destroy_plan(plan);
  }

  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = 0.5 * a0_ + bins[j].real();
  return out;
}

ResidualDecomposition residual_decomposition(const ClassFunction& cf, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("residual_decomposition: tol must be positive");
  const int n = cf.phi().n();
  const Kernel& kernel = cf.kernel();
  // Each remainder term is bounded by (2/pi) psi(nu).
  const std::int64_t cutoff = std::max<std::int64_t>(class_cutoff(kernel.psi, 0.5 * M_PI * tol), n);
  std::vector<ResidualDecomposition::Term> terms;
  terms.reserve(static_cast<std::size_t>(cutoff - n));
  for (std::int64_t nu = n + 1; nu <= cutoff; ++nu) {
    const double nud = static_cast<double>(nu);
    terms.push_back({nud, static_cast<double>(fold_frequency(nu, n).k),
                     psi_value(kernel.psi, nu) * sinc(0.5 * nud * cf.phi().delta()) / (2.0 * M_PI),
                     0.5 * M_PI * kernel.beta(nu)});
  }
  return ResidualDecomposition(n, 2.0 / M_PI * psi_value(kernel.psi, n), 0.5 * M_PI * kernel.beta(n),
                               cf.phi().delta(), std::move(terms));
}

double ResidualDecomposition::inner_integral(double x) const {
  return sinc(0.5 * n_ * delta_) * std::sin(main_phase_ - 0.5 * x);
}

double ResidualDecomposition::main_term(double x) const {
  return main_weight_ * std::sin(0.5 * (2 * n_ - 1) * x) * inner_integral(x);
}

double ResidualDecomposition::remainder(double x) const {
  const double shift = M_PI / n_;
  double sum = 0.0;
  for (const Term& t : terms_) {
    // cos(nu (t - x) + c) minus its folded image cos(nu t - k x + c), both
    // integrated against phi.
    const double direct = t.phase - t.nu * x;
    const double folded = t.phase - t.folded * x;
    sum += t.weight * ((std::cos(direct) - std::cos(t.nu * shift + direct)) -
                       (std::cos(folded) - std::cos(t.nu * shift + folded)));
  }
  return sum;
}

}  // namespace trigint
