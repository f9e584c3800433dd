#pragma once

#include <vector>

#include "lerch/core.hpp"

namespace lerch {

namespace detail {

// Lanczos, g = 7, 9 coefficients (Godfrey's set). Relative accuracy of the
// reconstructed gamma is ~1e-14 on Re(x) >= 0.5.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log(sin(pi x)) on the branch that is continuous in each half-plane and
// equals the real value on (0,1). Uses
//   sin(pi x) = (i/2) e^{-i pi x} (1 - e^{2 pi i x}),   Im(x) >= 0,
// where |e^{2 pi i x}| <= 1 keeps the last log principal.
inline cplx log_sin_pi(cplx x) {
  using constants::pi;
  if (x.imag() < 0.0) return std::conj(log_sin_pi(std::conj(x)));
  cplx q = std::exp(cplx(0.0, 2.0 * pi) * x);
  return -std::log(2.0) + cplx(0.0, pi / 2.0) - cplx(0.0, pi) * x + principal_log(1.0 - q);
}

}  // namespace detail

/// Principal-branch log-gamma, continuous on the plane cut along the
/// non-positive reals; on the cut itself the limit from above is returned.
inline cplx log_gamma(cplx x) {
  using constants::pi;
  if (is_nonpositive_integer(x))
    throw pole_error("log_gamma: pole at non-positive integer");
  if (x.real() < 0.5)
    return std::log(pi) - detail::log_sin_pi(x) - log_gamma(1.0 - x);
  cplx t = x + (detail::lanczos_g - 0.5);
  cplx a = detail::lanczos_c[0];
  for (int i = 1; i < 9; ++i) a += detail::lanczos_c[i] / (x - 1.0 + double(i));
  cplx r = 0.5 * constants::log_2pi + (x - 0.5) * principal_log(t) - t + principal_log(a);
  return require_finite(r, "log_gamma");
}

/// Gamma through the log; for real negative non-integer x the imaginary
/// residue of exp is the rounding of e^{+-i pi}, so callers wanting the real
/// value can take real().
inline cplx cgamma(cplx x) { return std::exp(log_gamma(x)); }

/// Gamma of a real argument (sign handled through the reflection branch).
inline double rgamma(double x) {
  cplx g = cgamma(cplx(x, 0.0));
  return g.real();
}

/// Sum of log-gammas of the numerators minus the denominators.
/// Exponentiating reproduces the quotient without overflow.
inline cplx gamma_quotient_log(const std::vector<cplx>& numerators,
                               const std::vector<cplx>& denominators) {
  kahan_sum acc;
  for (const cplx& x : numerators) acc.add(log_gamma(x));
  for (const cplx& x : denominators) acc.add(-log_gamma(x));
  return acc.value();
}

}  // namespace lerch
