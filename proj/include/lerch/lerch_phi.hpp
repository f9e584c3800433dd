#pragma once

#include <algorithm>
#include <vector>

#include "lerch/accel.hpp"
#include "lerch/core.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/zeta.hpp"

namespace lerch {

/// Arguments of the transcendent Phi(z, s, v) = sum_{n>=0} z^n (v+n)^{-s}.
struct lerch_args {
  cplx z;
  cplx s;
  cplx v;
};

/// Exact rational closed form of Phi(z, -k, v) for integer k >= 0: apply the
/// operator (v + z d/dz) k times to 1/(1-z). Representation: the k-step
/// coefficient recursion of  sum_r a_r z^r / (1-z)^{r+1}.
inline cplx lerch_phi_neg_int_s(cplx z, int k, cplx v) {
  if (k < 0) throw std::domain_error("lerch_phi_neg_int_s: k must be >= 0");
  if (k > 64) throw std::domain_error("lerch_phi_neg_int_s: order too large");
  if (z == cplx(1.0)) throw pole_error("lerch_phi_neg_int_s: pole at z = 1");
  std::vector<cplx> a(std::size_t(k) + 1, cplx(0.0));
  a[0] = 1.0;
  for (int step = 0; step < k; ++step) {
    std::vector<cplx> b(a.size(), cplx(0.0));
    for (int r = 0; r <= step; ++r) {
      b[r] += a[r] * (v + double(r));
      b[r + 1] += a[r] * double(r + 1);
    }
    a.swap(b);
  }
  cplx om = 1.0 - z;
  cplx pw = 1.0 / om;  // z^r / (1-z)^{r+1}
  kahan_sum acc;
  for (int r = 0; r <= k; ++r) {
    acc.add(a[r] * pw);
    pw *= z / om;
  }
  return require_finite(acc.value(), "lerch_phi_neg_int_s");
}

namespace detail {

inline void check_lerch_args(const lerch_args& a) {
  // series poles: v + n = 0 for some integer n >= 0
  if (is_nonpositive_integer(a.v))
    throw pole_error("lerch_phi: v on the non-positive integer lattice");
  if (a.z == cplx(1.0) && a.s.real() <= 1.0)
    throw std::domain_error("lerch_phi: z = 1 requires Re(s) > 1");
}

// direct power series with geometric tail bound, |z| <= 0.99
inline eval_result lerch_series(cplx z, cplx s, cplx v) {
  kahan_sum acc;
  double az = std::abs(z);
  cplx zp = 1.0;
  double tail = 1e300;
  long n = 0;
  double last = 0.0;
  for (; n < 100000; ++n) {
    cplx lg = principal_log(v + double(n));
    cplx term = zp * std::exp(-s * lg);
    acc.add(term);
    last = std::abs(term);
    zp *= z;
    if (n > 4 && last < 1e-17 * (1.0 + std::abs(acc.value()))) break;
  }
  tail = last * az / std::max(1e-300, 1.0 - az) * 2.0;
  return {require_finite(acc.value(), "lerch_phi series"), tail + 1e-16 * std::abs(acc.value()),
          eval_method::series, n + 1};
}

// v-recurrence normalisation: Phi(z,s,v) = sum_i c_i b_i^{-s} + scale *
// Phi(z,s,v') with Re(v') in [1,2] and at most 64 shifts either way. The
// head is kept as (coefficient, base) pairs so callers can differentiate it.
struct shift_plan {
  std::vector<std::pair<cplx, cplx>> head_terms;  // (c_i, b_i)
  cplx scale{1.0};
  cplx v_shifted;
  int steps = 0;

  cplx head(cplx s) const {
    kahan_sum acc;
    for (const auto& [c, b] : head_terms) acc.add(c * std::exp(-s * principal_log(b)));
    return acc.value();
  }
  cplx head_ds(cplx s) const {
    kahan_sum acc;
    for (const auto& [c, b] : head_terms) {
      cplx lg = principal_log(b);
      acc.add(-c * lg * std::exp(-s * lg));
    }
    return acc.value();
  }
};

inline shift_plan shift_v(cplx z, cplx v) {
  shift_plan p;
  p.v_shifted = v;
  cplx zp = 1.0;
  while (p.v_shifted.real() < 1.0 && p.steps < 64) {
    p.head_terms.emplace_back(zp, p.v_shifted);
    zp *= z;
    p.v_shifted += 1.0;
    ++p.steps;
  }
  if (p.steps > 0) {
    p.scale = zp;
    return p;
  }
  // downward: Phi(z,s,v) = (Phi(z,s,v-1) - (v-1)^{-s})/z, iterated
  while (p.v_shifted.real() > 2.0 && p.steps > -64 && z != cplx(0.0)) {
    p.v_shifted -= 1.0;
    p.scale /= z;
    p.head_terms.emplace_back(-p.scale, p.v_shifted);
    --p.steps;
  }
  return p;
}

inline eval_result lerch_unit_circle(cplx z, cplx s, cplx v, double tol) {
  // move Re(v) into [1,2] by the recurrence, then accelerate the partial
  // sums of the normalised series
  shift_plan plan = shift_v(z, v);
  std::vector<cplx> zpow{cplx(1.0)};
  auto term_fast = [&](long n) -> cplx {
    while ((long)zpow.size() <= n) zpow.push_back(zpow.back() * z);
    return zpow[std::size_t(n)] * std::exp(-s * principal_log(plan.v_shifted + double(n)));
  };
  accel_result ar = levin_sum(term_fast, 220, std::min(tol, 1e-13));
  cplx value = plan.head(s) + plan.scale * ar.value;
  double err = ar.abs_err * std::abs(plan.scale) + 1e-16 * std::abs(value);
  eval_result out{value, err, eval_method::accelerated, ar.terms + std::abs(plan.steps)};

  bool good = err <= std::max(tol, 1e-12) * (1.0 + std::abs(value));
  if (!good && s.real() > -2.5 && v.real() > 0.0) {
    // accelerated estimate did not settle: integral representation fallback
    eval_result q = lerch_phi_integral(z, s, v, std::min(tol, 1e-12));
    if (q.abs_err < err) return q;
  }
  if (err > 1e-5 * (1.0 + std::abs(value)))
    throw convergence_error("lerch_phi: acceleration stagnated above tolerance");
  require_finite(out.value, "lerch_phi accelerated");
  return out;
}

}  // namespace detail

/// Evaluate Phi(z, s, v). Regimes: direct series for |z| <= 0.99; exact
/// rational closed form for s a non-positive integer; the Hurwitz-zeta split
/// at z = -1; accelerated unit-circle summation otherwise, with the integral
/// representation as fallback. |z| > 1 is out of range.
inline eval_result lerch_phi(const lerch_args& args, double tol = 1e-12) {
  detail::check_lerch_args(args);
  const cplx z = args.z, s = args.s, v = args.v;
  const double az = std::abs(z);

  if (az > 1.0 + 1e-12) throw std::domain_error("lerch_phi: |z| > 1 unsupported");

  if (z == cplx(0.0)) {
    cplx val = std::exp(-s * principal_log(v));
    return {val, 1e-16 * std::abs(val), eval_method::series, 1};
  }

  if (is_integer(s) && s.real() <= 0.0 && z != cplx(1.0)) {
    cplx val = lerch_phi_neg_int_s(z, int(-s.real()), v);
    return {val, 1e-15 * (1.0 + std::abs(val)), eval_method::closed_form_neg_int_s,
            long(-s.real()) + 1};
  }

  if (z == cplx(1.0)) {
    // Hurwitz zeta itself (Re(s) > 1 enforced above)
    eval_result r = hurwitz_zeta(s, v);
    r.method = eval_method::hurwitz_split;
    return r;
  }

  if (az <= 0.99) return detail::lerch_series(z, s, v);

  if (z == cplx(-1.0) && s != cplx(1.0)) {
    // Phi(-1,s,v) = 2^{-s} (zeta(s,v/2) - zeta(s,(v+1)/2))
    auto za = detail::hurwitz_zeta_em(s, v / 2.0, false);
    auto zb = detail::hurwitz_zeta_em(s, (v + 1.0) / 2.0, false);
    cplx pw = std::exp(-s * std::log(cplx(2.0)));
    cplx val = pw * (za.value - zb.value);
    return {require_finite(val, "lerch_phi split"),
            (za.abs_err + zb.abs_err) * std::abs(pw) + 1e-16 * std::abs(val),
            eval_method::hurwitz_split, za.work + zb.work};
  }

  return detail::lerch_unit_circle(z, s, v, tol);
}

inline eval_result lerch_phi(cplx z, cplx s, cplx v, double tol = 1e-12) {
  return lerch_phi(lerch_args{z, s, v}, tol);
}

enum class sderiv_scheme { central_diff, termwise_series, hurwitz_route };

/// d/ds Phi(z, s, v).
///  - hurwitz_route (z = -1 only, s != 1): -log2 * Phi + 2^{-s}(zeta'(s,v/2)
///    - zeta'(s,(v+1)/2)), with zeta' from the differentiated Euler-Maclaurin
///    formula; exact-grade at every admissible s.
///  - termwise_series (|z| <= 1, z != 1): sum of -log(v+n)(v+n)^{-s} z^n,
///    accelerated on and near the unit circle.
///  - central_diff: symmetric difference, h = 1e-5, one Richardson step.
inline eval_result lerch_phi_sderiv(const lerch_args& args, sderiv_scheme scheme,
                                    double tol = 1e-10) {
  const cplx z = args.z, s = args.s, v = args.v;
  switch (scheme) {
    case sderiv_scheme::hurwitz_route: {
      if (z != cplx(-1.0))
        throw std::domain_error("lerch_phi_sderiv: hurwitz_route needs z = -1");
      if (s == cplx(1.0))
        throw std::domain_error("lerch_phi_sderiv: hurwitz_route undefined at s = 1");
      auto za = detail::hurwitz_zeta_em(s, v / 2.0, true);
      auto zb = detail::hurwitz_zeta_em(s, (v + 1.0) / 2.0, true);
      const double ln2 = 0.693147180559945309417232121458;
      cplx pw = std::exp(-s * std::log(cplx(2.0)));
      cplx phi = pw * (za.value - zb.value);
      cplx val = -ln2 * phi + pw * (za.ds - zb.ds);
      return {require_finite(val, "sderiv"), (za.abs_err + zb.abs_err) * 2.0 * std::abs(pw),
              eval_method::hurwitz_split, za.work + zb.work};
    }
    case sderiv_scheme::termwise_series: {
      detail::check_lerch_args(args);
      if (std::abs(z) > 1.0 + 1e-12 || z == cplx(1.0))
        throw std::domain_error("lerch_phi_sderiv: termwise needs |z| <= 1, z != 1");
      auto dterm_at = [&](cplx vv, long n) -> cplx {
        cplx lg = principal_log(vv + double(n));
        return -lg * std::exp(-s * lg);
      };
      if (std::abs(z) <= 0.99) {
        kahan_sum acc;
        cplx zp = 1.0;
        long n = 0;
        double last = 0.0;
        for (; n < 100000; ++n) {
          cplx t = zp * dterm_at(v, n);
          acc.add(t);
          last = std::abs(t);
          zp *= z;
          if (n > 4 && last < 1e-17 * (1.0 + std::abs(acc.value()))) break;
        }
        double tail = last * std::abs(z) / std::max(1e-300, 1.0 - std::abs(z)) * 2.0;
        return {require_finite(acc.value(), "sderiv series"), tail, eval_method::series, n + 1};
      }
      if (z == cplx(-1.0)) {
        accel_result ar = cvz_alternating_sum(
            [&](long k) -> cplx { return dterm_at(v, k); }, 56);
        return {ar.value, ar.abs_err, eval_method::accelerated, ar.terms};
      }
      detail::shift_plan plan = detail::shift_v(z, v);
      std::vector<cplx> zpow{cplx(1.0)};
      accel_result ar = levin_sum(
          [&](long n) -> cplx {
            while ((long)zpow.size() <= n) zpow.push_back(zpow.back() * z);
            return zpow[std::size_t(n)] * dterm_at(plan.v_shifted, n);
          },
          220, std::min(tol, 1e-12));
      cplx val = plan.head_ds(s) + plan.scale * ar.value;
      return {require_finite(val, "sderiv accel"),
              ar.abs_err * std::abs(plan.scale) + 1e-16 * std::abs(val),
              eval_method::accelerated, ar.terms};
    }
    case sderiv_scheme::central_diff: {
      const double h = 1e-5;
      auto phi = [&](cplx ss) { return lerch_phi(lerch_args{z, ss, v}, 1e-13).value; };
      cplx d1 = (phi(s + h) - phi(s - h)) / (2.0 * h);
      cplx d2 = (phi(s + h / 2.0) - phi(s - h / 2.0)) / h;
      cplx val = (4.0 * d2 - d1) / 3.0;
      double err = std::abs(d2 - d1) / 3.0 + 1e-11 * (1.0 + std::abs(val));
      return {require_finite(val, "sderiv central"), err, eval_method::recurrence, 4};
    }
  }
  throw std::logic_error("lerch_phi_sderiv: bad scheme");
}

/// Scheme choice: exact route at z = -1 (termwise at the s = 1 pole of the
/// route), termwise on the closed unit disk otherwise, central differences
/// as the final fallback.
inline eval_result lerch_phi_sderiv(const lerch_args& args, double tol = 1e-10) {
  if (args.z == cplx(-1.0) && args.s != cplx(1.0))
    return lerch_phi_sderiv(args, sderiv_scheme::hurwitz_route, tol);
  if (std::abs(args.z) <= 1.0 + 1e-12 && args.z != cplx(1.0))
    return lerch_phi_sderiv(args, sderiv_scheme::termwise_series, tol);
  return lerch_phi_sderiv(args, sderiv_scheme::central_diff, tol);
}

/// 2F1(1, a; a+1; z) = a * Phi(z, 1, a)  (the only hypergeometric family here).
inline eval_result hyp2f1_1a(cplx a, cplx z) {
  if (is_nonpositive_integer(a)) throw pole_error("hyp2f1_1a: a at a non-positive integer");
  if (std::abs(z) > 1.0 + 1e-12 || z == cplx(1.0))
    throw std::domain_error("hyp2f1_1a: need |z| <= 1, z != 1");
  if (z == cplx(0.0)) return {cplx(1.0), 0.0, eval_method::series, 1};
  eval_result r = lerch_phi(lerch_args{z, 1.0, a});
  r.value *= a;
  r.abs_err *= std::abs(a);
  return r;
}

}  // namespace lerch
