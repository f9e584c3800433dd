#pragma once

#include <functional>
#include <vector>

#include "lerch/core.hpp"
#include "lerch/gamma.hpp"

namespace lerch {

namespace detail {

struct quad_piece {
  cplx value{0.0};
  double err = 0.0;
  long nodes = 0;
};

// Generic double-exponential trapezoid driver. map(u) must fill (t, w) with
// the abscissa and dt/du; the driver refines h until the defect settles.
template <class Map, class F>
quad_piece de_levels(Map map, F f, double tol, double u_limit) {
  double h = 0.5;
  kahan_sum g_sum;  // sum of w(u) f(t(u)) over all evaluated nodes of step h
  long nodes = 0;

  auto eval_line = [&](double step, bool odd_only) {
    // walk k outward in both directions; stop a direction on repeated tiny terms
    for (int dir = 0; dir < 2; ++dir) {
      int tiny = 0;
      for (long k = (dir == 0 ? 0 : 1);; ++k) {
        long idx = (dir == 0) ? k : -k;
        double u = step * double(idx);
        if (std::abs(u) > u_limit) break;
        if (odd_only && (idx % 2 == 0)) continue;
        double t, w;
        map(u, t, w);
        if (!(w > 0.0) || !std::isfinite(t)) {
          if (++tiny > 3) break;
          continue;
        }
        cplx fv = f(t);
        if (!is_finite(fv)) throw convergence_error("integrate: non-finite integrand");
        cplx contrib = w * fv;
        g_sum.add(contrib);
        ++nodes;
        if (std::abs(contrib) < 1e-18 * (1.0 + std::abs(g_sum.value()))) {
          if (++tiny > 3) break;
        } else {
          tiny = 0;
        }
      }
    }
  };

  eval_line(h, false);
  cplx prev = h * g_sum.value();
  double err = std::abs(prev) + 1.0;
  for (int level = 0; level < 9; ++level) {
    h *= 0.5;
    eval_line(h, true);
    cplx cur = h * g_sum.value();
    err = std::abs(cur - prev);
    prev = cur;
    if (err <= tol * 0.25 * (1.0 + std::abs(cur)) && level >= 2) break;
  }
  return {prev, err + 1e-16 * std::abs(prev), nodes};
}

template <class F>
quad_piece de_01(F f, double tol) {
  // tanh-sinh: x = 1/(1 + e^{-pi sinh u}), dx/du = pi cosh(u) x (1-x)
  auto map = [](double u, double& t, double& w) {
    double s = constants::pi * std::sinh(u);
    double x = 1.0 / (1.0 + std::exp(-s));
    t = x;
    w = constants::pi * std::cosh(u) * x * (1.0 - x);
  };
  return de_levels(map, f, tol, 6.5);
}

template <class F>
quad_piece de_1inf(F f, double tol) {
  // t = 1 + exp(u - e^{-u}): double-exponential towards t -> 1+, single
  // exponential growth upward (pairs with exponentially decaying f).
  auto map = [](double u, double& t, double& w) {
    double e = std::exp(-u);
    double g = std::exp(u - e);
    t = 1.0 + g;
    w = g * (1.0 + e);
  };
  return de_levels(map, f, tol, 9.0);
}

}  // namespace detail

/// Integral of f over (0, infinity): tanh-sinh on [0,1] joined with an
/// exp-decay double-exponential rule on [1,inf). f may have an integrable
/// algebraic singularity at 0 and must decay at least exponentially.
inline eval_result integrate_semi_infinite(const std::function<cplx(double)>& f, double tol) {
  auto a = detail::de_01(f, tol);
  auto b = detail::de_1inf(f, tol);
  eval_result out{a.value + b.value, a.err + b.err, eval_method::integral_rep,
                  a.nodes + b.nodes};
  if (out.abs_err > std::max(tol, 1e-15) * (1.0 + std::abs(out.value)) * 4.0)
    throw convergence_error("integrate_semi_infinite: tolerance not reached");
  return out;
}

namespace detail {

// Integral representation of the Lerch transcendent,
//   Phi(z,s,v) = 1/Gamma(s) Int_0^inf t^{s-1} e^{-(v-1)t} / (e^t - z) dt,
// valid for Re(v) > 0, |z| <= 1, z != 1, Re(s) > 0. For Re(s) <= 0 the
// exponent is lifted by repeated integration by parts: each step trades
// t^{s-1} g(t) for -t^s g'(t)/s, and g' stays inside the family
// c e^{-ut} (e^t - z)^{-beta}.
inline eval_result lerch_phi_integral(cplx z, cplx s, cplx v, double tol) {
  if (v.real() <= 0.0) throw std::domain_error("lerch integral: Re(v) must be positive");
  if (std::abs(z) > 1.0 + 1e-12 || z == cplx(1.0))
    throw std::domain_error("lerch integral: need |z| <= 1, z != 1");

  struct term {
    cplx c, u;
    int beta;
  };
  std::vector<term> terms{{cplx(1.0), v - 1.0, 1}};
  int lift = 0;
  while (s.real() + lift <= 0.25 && lift < 4) {
    std::vector<term> next;
    next.reserve(terms.size() * 2);
    for (const term& t : terms) {
      next.push_back({-t.c * (t.u + double(t.beta)), t.u, t.beta});
      next.push_back({-t.c * double(t.beta) * z, t.u, t.beta + 1});
    }
    terms.swap(next);
    ++lift;
  }
  if (s.real() + lift <= 0.25)
    throw std::domain_error("lerch integral: order too negative for this path");

  cplx se = s + double(lift) - 1.0;
  auto integrand = [&](double t) -> cplx {
    // e^{-ut}(e^t-z)^{-b} = e^{-(u+b)t} (1 - z e^{-t})^{-b}
    cplx emt = std::exp(-t);
    cplx base = 1.0 - z * emt;
    kahan_sum acc;
    for (const term& tm : terms) {
      cplx val = tm.c * std::exp(-(tm.u + double(tm.beta)) * t);
      cplx b = base;
      for (int i = 1; i < tm.beta; ++i) b *= base;
      acc.add(val / b);
    }
    return std::exp(se * std::log(t)) * acc.value();
  };

  eval_result q = integrate_semi_infinite(integrand, tol);
  cplx pref = std::exp(-log_gamma(s + double(lift)));
  if (lift % 2 != 0) pref = -pref;
  eval_result out{pref * q.value, q.abs_err * std::abs(pref), eval_method::integral_rep, q.work};
  require_finite(out.value, "lerch_phi_integral");
  return out;
}

}  // namespace detail

}  // namespace lerch
