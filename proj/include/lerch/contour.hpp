#pragma once

#include <functional>

#include "lerch/core.hpp"
#include "lerch/gamma.hpp"
#include "lerch/lerch_phi.hpp"
#include "lerch/verify_types.hpp"

namespace lerch {

/// Closed circle |w - center| = radius discretised with `nodes` points
/// (power of two). Trapezoid on a circle is spectrally accurate for
/// integrands analytic in an annulus around it.
struct contour_spec {
  double radius = 0.5;
  int nodes = 512;
  cplx center{0.0};
};

/// (1/2*pi*i) closed-circle integral of f(w) dw.
inline cplx contour_circle_integral(const std::function<cplx(cplx)>& f, const contour_spec& spec) {
  if (spec.radius <= 0.0) throw std::domain_error("contour: radius must be positive");
  if (spec.nodes < 4) throw std::domain_error("contour: too few nodes");
  // (1/2*pi*i) Int f(w) dw = (1/N) sum f(w_q) w_q  over w_q = c + r e^{2*pi*i*q/N}
  kahan_sum acc;
  for (int q = 0; q < spec.nodes; ++q) {
    cplx w = spec.center + spec.radius * unit_phase(double(q) / spec.nodes);
    acc.add(f(w) * (w - spec.center));
  }
  return acc.value() / double(spec.nodes);
}

/// (1/2*pi*i) Int e^{w y} w^{-k-1} dw over the circle: equals y^k / k!.
inline cplx contour_circle_cauchy(cplx y, int k, const contour_spec& spec = {}) {
  if (k < 0) throw std::domain_error("contour_circle_cauchy: k must be >= 0");
  auto f = [&](cplx w) {
    cplx wk = 1.0;
    for (int i = 0; i < k + 1; ++i) wk *= w;
    return std::exp(w * y) / wk;
  };
  return contour_circle_integral(f, spec);
}

namespace detail {

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline void check_sec_contour(cplx m, int k, double b, const contour_spec& spec) {
  if (k < 0) throw std::domain_error("contour verify: k must be a non-negative integer");
  if (b <= 0.0) throw std::domain_error("contour verify: b must be positive");
  if (m.imag() <= 0.0)
    throw std::domain_error("contour verify: Im(m) > 0 required for convergence");
  if (spec.radius >= m.imag())
    throw std::domain_error("contour verify: radius must stay below Im(m)");
}

}  // namespace detail

/// Dual-path check of the secant kernel: the Hurwitz-Lerch closed form of
/// (1/2*pi*i) Int a^w w^{-k-1} * (-i) sec(b(m+w)) dw against direct circle
/// quadrature. Valid for integer k >= 0 (the circle closes), Im(m) > radius.
inline identity_report contour_verify_gen_sec(cplx a, cplx m, int k, double b,
                                              const contour_spec& spec = {}) {
  detail::check_sec_contour(m, k, b, spec);
  identity_report rep;
  rep.kase.id = "gen_sec";
  rep.kase.params = {{"a", a}, {"m", m}, {"k", cplx(double(k))}, {"b", cplx(b)}};
  rep.kase.tol_abs = 1e-9;
  rep.kase.tol_rel = 1e-9;

  cplx la = principal_log(a);
  cplx ib(0.0, b);
  cplx zz = -std::exp(2.0 * ib * m);
  cplx vv = (b - cplx(0.0, 1.0) * la) / (2.0 * b);
  cplx ibk = principal_power(ib, double(k));
  rep.lhs = -cplx(0.0, 1.0) * std::pow(2.0, k + 1) * ibk * std::exp(ib * m) *
            lerch_phi_neg_int_s(zz, k, vv) / detail::factorial(k);

  auto f = [&](cplx w) {
    cplx wk = 1.0;
    for (int i = 0; i < k + 1; ++i) wk *= w;
    return std::exp(w * la) / wk * (-cplx(0.0, 1.0)) / std::cos(b * (m + w));
  };
  rep.rhs = contour_circle_integral(f, spec);
  fill_residuals(rep, compare_mode::value);
  return rep;
}

/// Same dual-path check for the cosine-times-secant kernel,
/// (1/2*pi*i) Int a^w w^{-k-1} sec(b(m+w)) cos(x(m+w)) dw.
inline identity_report contour_verify_gen_cos_sec(cplx a, cplx m, int k, double b, double x,
                                                  const contour_spec& spec = {}) {
  detail::check_sec_contour(m, k, b, spec);
  identity_report rep;
  rep.kase.id = "gen_cos_sec";
  rep.kase.params = {{"a", a}, {"m", m},  {"k", cplx(double(k))},
                     {"b", cplx(b)}, {"x", cplx(x)}};
  rep.kase.tol_abs = 1e-9;
  rep.kase.tol_rel = 1e-9;

  cplx la = principal_log(a);
  cplx ib(0.0, b);
  cplx il(0.0, 1.0);
  cplx zz = -std::exp(2.0 * ib * m);
  cplx v1 = (b - x - il * la) / (2.0 * b);
  cplx v2 = (b + x - il * la) / (2.0 * b);
  cplx ibk = principal_power(ib, double(k));
  rep.lhs = std::pow(2.0, k) * ibk * std::exp(il * m * (b - x)) *
            (lerch_phi_neg_int_s(zz, k, v1) +
             std::exp(2.0 * il * m * x) * lerch_phi_neg_int_s(zz, k, v2)) /
            detail::factorial(k);

  auto f = [&](cplx w) {
    cplx wk = 1.0;
    for (int i = 0; i < k + 1; ++i) wk *= w;
    return std::exp(w * la) / wk / std::cos(b * (m + w)) * std::cos(x * (m + w));
  };
  rep.rhs = contour_circle_integral(f, spec);
  fill_residuals(rep, compare_mode::value);
  return rep;
}

}  // namespace lerch
