#pragma once

#include <functional>
#include <vector>

#include "lerch/core.hpp"

namespace lerch {

struct accel_result {
  cplx value{0.0};
  double abs_err = 0.0;  // heuristic: difference of successive transform orders
  long terms = 0;
};

namespace detail {

using lcplx = std::complex<long double>;

// Levin u-type sequence transformation on the partial sums, beta = 1,
// remainder estimates omega_n = (beta + n) a_n. The numerator/denominator
// tables follow the classic recursive scheme; accumulation is kept in
// extended precision because the transform subtracts nearly equal big terms
// when the input sequence diverges (anti-limit evaluation).
class levin_u {
 public:
  explicit levin_u(int max_terms) : numer_(max_terms), denom_(max_terms) {}

  cplx next(lcplx partial_sum, lcplx term) {
    const long double beta = 1.0L;
    int n = n_++;
    lcplx omega = (beta + n) * term;
    if (omega == lcplx(0.0L)) {
      // terminating series: the partial sum is exact
      exact_ = true;
      last_val_ = partial_sum;
      last_eps_ = 0.0;
      return cplx(double(partial_sum.real()), double(partial_sum.imag()));
    }
    lcplx t = 1.0L / (beta + n);
    denom_[n] = t / omega;
    numer_[n] = partial_sum * denom_[n];
    if (n > 0) {
      lcplx ratio = (beta + n - 1) * t;
      lcplx scale = t;
      for (int j = 1; j <= n; ++j) {
        lcplx fact = (n - j + beta) * scale;
        numer_[n - j] = numer_[n - j + 1] - fact * numer_[n - j];
        denom_[n - j] = denom_[n - j + 1] - fact * denom_[n - j];
        scale *= ratio;
      }
    }
    lcplx val = std::abs(denom_[0]) < 1e-300L ? last_val_ : numer_[0] / denom_[0];
    last_eps_ = double(std::abs(val - last_val_));
    last_val_ = val;
    return cplx(double(val.real()), double(val.imag()));
  }

  double last_delta() const { return last_eps_; }
  bool exact() const { return exact_; }

 private:
  std::vector<lcplx> numer_, denom_;
  lcplx last_val_{0.0L};
  double last_eps_ = 0.0;
  int n_ = 0;
  bool exact_ = false;
};

}  // namespace detail

/// Accelerated sum of a power-series-like sequence: terms(n) returns the n-th
/// term. Works for conditionally convergent unit-circle series and for their
/// algebraically divergent continuations (the transform converges to the
/// anti-limit). The reported error is heuristic.
inline accel_result levin_sum(const std::function<cplx(long)>& term_fn, int max_terms,
                              double tol) {
  detail::levin_u lev(max_terms);
  detail::lcplx partial = 0.0L;
  cplx best{0.0};
  double best_eps = 1e300;
  int stable = 0, zeros = 0, steps = 0;
  long n = 0;
  for (; n < max_terms; ++n) {
    cplx tn = term_fn(n);
    if (tn == cplx(0.0)) {
      // an isolated zero term (log factor at v+n = 1) must not feed the
      // transform; a run of them means the series terminated
      if (++zeros >= 4) {
        cplx val(double(partial.real()), double(partial.imag()));
        return {val, 1e-16 * (1.0 + std::abs(val)), n + 1};
      }
      continue;
    }
    zeros = 0;
    detail::lcplx t(tn.real(), tn.imag());
    partial += t;
    cplx val = lev.next(partial, t);
    ++steps;
    if (steps >= 4) {
      double eps = lev.last_delta();
      if (eps < best_eps) {
        best_eps = eps;
        best = val;
      }
      if (eps <= tol * (1.0 + std::abs(val))) {
        if (++stable >= 2) return {val, eps + 1e-16 * std::abs(val), n + 1};
      } else {
        stable = 0;
      }
    }
  }
  return {best, best_eps + 1e-16 * std::abs(best), n};
}

/// Alternating-series transform (Cohen-Rodriguez Villegas-Zagier, algorithm 1)
/// for sums  sum_{k>=0} (-1)^k c_k  with smooth coefficients c_k; also sound
/// for mildly divergent c_k (returns the Abel anti-limit). Error ~ 5.83^{-n}.
inline cplx cvz_alternating(const std::function<cplx(long)>& coef_fn, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d;
  detail::lcplx s = 0.0L;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    cplx ck = coef_fn(k);
    s += detail::lcplx(c * ck.real(), c * ck.imag());
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  detail::lcplx v = s / (long double)d;
  return cplx(double(v.real()), double(v.imag()));
}

/// cvz_alternating with an error estimate from comparing two orders.
inline accel_result cvz_alternating_sum(const std::function<cplx(long)>& coef_fn, int n = 48) {
  cplx lo = cvz_alternating(coef_fn, n - 10);
  cplx hi = cvz_alternating(coef_fn, n);
  return {hi, std::abs(hi - lo) + 1e-16 * std::abs(hi), n};
}

}  // namespace lerch
