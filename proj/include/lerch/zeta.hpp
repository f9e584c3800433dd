#pragma once

#include <array>
#include <cmath>

#include "lerch/core.hpp"
#include "lerch/gamma.hpp"

namespace lerch {

namespace detail {

// B_{2k}, k = 1..15, as exact rationals.
inline constexpr std::array<double, 15> bernoulli_2k = {
    1.0 / 6.0,        -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,      5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,        -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0,  -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
};

struct zeta_em_result {
  cplx value{0.0};
  cplx ds{0.0};      // d/ds, filled when requested
  double abs_err = 0.0;
  long work = 0;
};

// Euler-Maclaurin for zeta(s, a) = sum_{n>=0} (a+n)^{-s}, with optional
// simultaneous d/ds. Shifts a into Re >= 1 by the recurrence first, then
//   zeta(s,b) = sum_{n<N} (b+n)^{-s} + (b+N)^{1-s}/(s-1) + (b+N)^{-s}/2
//             + sum_k B_{2k}/(2k)! (s)_{2k-1} (b+N)^{-s-2k+1}.
// cf. dlmf.nist.gov/25.11.E5; every piece is elementary in s, so the
// derivative is accumulated term by term alongside the value.
inline zeta_em_result hurwitz_zeta_em(cplx s, cplx a, bool want_ds) {
  if (s == cplx(1.0)) throw pole_error("hurwitz_zeta: pole at s = 1");
  if (is_nonpositive_integer(a)) throw pole_error("hurwitz_zeta: a is a non-positive integer");

  zeta_em_result out;
  kahan_sum val, der;
  double magsum = 0.0;  // sum of |pieces|: rounding floor of the cancelling sum
  long shifts = 0;

  cplx b = a;
  while (b.real() < 1.0) {
    if (++shifts > 100000) throw convergence_error("hurwitz_zeta: shift limit");
    cplx lg = principal_log(b);
    cplx term = std::exp(-s * lg);
    val.add(term);
    magsum += std::abs(term);
    if (want_ds) der.add(-lg * term);
    b += 1.0;
  }

  // large |b+N| shrinks the Bernoulli tail but inflates cancellation between
  // the direct sum and the integral term when Re(s) < 0; this balance keeps
  // the series valid (2 pi |b+N| > |s| + 2M) without overshooting
  double target = std::max(12.0, (std::abs(s) + 30.0) / 6.0);
  long n_direct = 0;
  while (std::abs(b) < target) {
    cplx lg = principal_log(b);
    cplx term = std::exp(-s * lg);
    val.add(term);
    magsum += std::abs(term);
    if (want_ds) der.add(-lg * term);
    b += 1.0;
    ++n_direct;
  }

  const cplx w = b;
  const cplx lw = principal_log(w);

  // (b+N)^{1-s}/(s-1)
  {
    cplx t = std::exp((1.0 - s) * lw) / (s - 1.0);
    val.add(t);
    magsum += std::abs(t);
    if (want_ds) der.add(t * (-lw - 1.0 / (s - 1.0)));
  }
  // (b+N)^{-s}/2
  cplx w_pow = std::exp(-s * lw);
  val.add(0.5 * w_pow);
  magsum += 0.5 * std::abs(w_pow);
  if (want_ds) der.add(-0.5 * lw * w_pow);

  // correction terms; (P, P') track the rising product (s)(s+1)...(s+2k-2)
  cplx p = s, dp = 1.0;
  cplx w2 = 1.0 / (w * w);
  cplx wfac = w_pow / w;  // (b+N)^{-s-1}
  double fact = 2.0;      // (2k)!
  double tol = 1e-18;
  double last_term = 0.0;
  for (std::size_t k = 0; k < bernoulli_2k.size(); ++k) {
    if (k > 0) {
      // extend (s)_{2k-1} -> (s)_{2k+1} by the factors (s+2k-1)(s+2k), keeping dP
      cplx f0 = s + double(2 * k - 1), f1 = s + double(2 * k);
      dp = dp * f0 + p;
      p = p * f0;
      dp = dp * f1 + p;
      p = p * f1;
      fact *= double(2 * k + 1) * double(2 * k + 2);
      wfac *= w2;
    }
    cplx coef = bernoulli_2k[k] / fact;
    cplx term = coef * p * wfac;
    val.add(term);
    double mag = std::abs(term);
    if (want_ds) {
      // the derivative corrections survive where the value ones vanish
      // (P_k(s) = 0 at non-positive integer s), so gate on both
      cplx dterm = coef * (dp - p * lw) * wfac;
      der.add(dterm);
      mag = std::max(mag, std::abs(dterm) / (1.0 + std::abs(lw)));
    }
    last_term = mag;
    if (mag < tol * (std::abs(val.value()) + 1.0)) break;
  }

  // standard remainder bound |(s+2M+1)/(Re(s)+2M+1)| * |next term| ~ last term
  double sigma_guard = s.real() + 31.0;
  double bound_fac = sigma_guard > 0.0 ? std::abs(s + 31.0) / sigma_guard : 10.0;
  out.abs_err = last_term * bound_fac + 1e-15 * magsum + 1e-16 * std::abs(val.value());
  out.value = require_finite(val.value(), "hurwitz_zeta");
  if (want_ds) out.ds = require_finite(der.value(), "hurwitz_zeta_ds");
  out.work = shifts + n_direct + long(bernoulli_2k.size());
  return out;
}

// Bernoulli polynomial B_m(a) = sum_k C(m,k) B_k a^{m-k}; exact coefficients
// up to m = 31.
inline cplx bernoulli_poly(int m, cplx a) {
  if (m < 0 || m > 31) throw std::domain_error("bernoulli_poly: unsupported degree");
  auto bern = [](int k) -> double {
    if (k == 0) return 1.0;
    if (k == 1) return -0.5;
    if (k % 2 != 0) return 0.0;
    return detail::bernoulli_2k[std::size_t(k / 2 - 1)];
  };
  cplx sum = 0.0;
  double binom = 1.0;
  // iterate k = 0..m with C(m,k) updated multiplicatively, powers of a descending
  std::vector<cplx> apow(std::size_t(m) + 1, cplx(1.0));
  for (int i = 1; i <= m; ++i) apow[std::size_t(i)] = apow[std::size_t(i - 1)] * a;
  kahan_sum acc;
  for (int k = 0; k <= m; ++k) {
    acc.add(binom * bern(k) * apow[std::size_t(m - k)]);
    binom = binom * double(m - k) / double(k + 1);
  }
  sum = acc.value();
  return sum;
}

}  // namespace detail

/// Hurwitz zeta via Euler-Maclaurin with a rigorous tail bound; non-positive
/// integer orders take the exact polynomial form zeta(-n,a) = -B_{n+1}(a)/(n+1).
inline eval_result hurwitz_zeta(cplx s, cplx a) {
  if (is_integer(s) && s.real() <= 0.0 && s.real() >= -30.0) {
    if (is_nonpositive_integer(a)) throw pole_error("hurwitz_zeta: a is a non-positive integer");
    int n = int(-s.real());
    cplx v = -detail::bernoulli_poly(n + 1, a) / double(n + 1);
    return {v, 1e-15 * (1.0 + std::abs(v)), eval_method::series, n + 1};
  }
  auto r = detail::hurwitz_zeta_em(s, a, false);
  return {r.value, r.abs_err, eval_method::series, r.work};
}

/// d/ds zeta(s, a), from the termwise-differentiated Euler-Maclaurin formula.
inline eval_result hurwitz_zeta_sderiv(cplx s, cplx a) {
  auto r = detail::hurwitz_zeta_em(s, a, true);
  return {r.ds, r.abs_err, eval_method::series, r.work};
}

/// d/ds zeta(s, a) at s = 0 equals log Gamma(a) - log(2 pi)/2
/// (dlmf.nist.gov/25.11.E18); exact composition, no limit taken.
inline cplx hurwitz_zeta_sderiv_at0(cplx a) {
  return log_gamma(a) - 0.5 * constants::log_2pi;
}

/// Trigamma psi^(1)(a) = zeta(2, a); Re(a) <= 0 handled by the recurrence
/// built into the zeta shift.
inline cplx trigamma(cplx a) {
  if (is_nonpositive_integer(a)) throw pole_error("trigamma: pole at non-positive integer");
  return detail::hurwitz_zeta_em(2.0, a, false).value;
}

}  // namespace lerch
