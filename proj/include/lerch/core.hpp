#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lerch {

using cplx = std::complex<double>;

namespace constants {
inline constexpr double pi          = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double catalan     = 0.91596559417721901505460351493238411;
inline constexpr double log_2pi     = 1.83787706640934548356065947281123528;
}  // namespace constants

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

inline cplx require_finite(cplx x, const char* what) {
  if (!is_finite(x)) throw convergence_error(std::string(what) + ": non-finite result");
  return x;
}

/// True when x sits on a non-positive integer (pole of the gamma family).
inline bool is_nonpositive_integer(cplx x) {
  if (x.imag() != 0.0) return false;
  double r = x.real();
  return r <= 0.0 && r == std::floor(r);
}

inline bool is_integer(cplx x) { return x.imag() == 0.0 && x.real() == std::floor(x.real()); }

/// Principal log with the branch cut value pinned to Im = +pi (treats -0.0
/// imaginary parts as +0.0 so negative reals land on the upper side).
inline cplx principal_log(cplx w) {
  if (w.imag() == 0.0) w = cplx(w.real(), 0.0);
  return std::log(w);
}

/// exp(e * (Log b + 2*pi*i*branch)) with the principal Log.
/// b == 0 is allowed only for Re(e) > 0 (the limit is 0).
inline cplx principal_power(cplx base, cplx expo, int branch = 0) {
  if (base == cplx(0.0)) {
    if (expo == cplx(0.0)) return 1.0;
    if (expo.real() > 0.0) return 0.0;
    throw std::domain_error("principal_power: zero base with non-positive exponent");
  }
  if (expo == cplx(0.0)) return 1.0;
  if (expo == cplx(1.0) && branch == 0) return base;
  cplx lg = principal_log(base);
  if (branch != 0) lg += cplx(0.0, 2.0 * constants::pi * branch);
  return std::exp(expo * lg);
}

/// e^{2*pi*i*t} with exact collapse of integer t (phase reduction done on
/// t - round(t) so huge integer arguments do not lose the phase).
inline cplx unit_phase(double t) {
  double f = t - std::round(t);
  if (f == 0.0) return cplx(1.0, 0.0);
  return std::polar(1.0, 2.0 * constants::pi * f);
}

/// Compensated (Kahan) accumulator for complex sums.
struct kahan_sum {
  cplx s{0.0}, c{0.0};
  void add(cplx x) {
    cplx y = x - c;
    cplx t = s + y;
    c = (t - s) - y;
    s = t;
  }
  cplx value() const { return s; }
};

enum class eval_method {
  series,
  accelerated,
  closed_form_neg_int_s,
  integral_rep,
  recurrence,
  hurwitz_split,  // z = -1 reduction through a pair of Hurwitz zetas
};

inline const char* to_string(eval_method m) {
  switch (m) {
    case eval_method::series: return "series";
    case eval_method::accelerated: return "accelerated";
    case eval_method::closed_form_neg_int_s: return "closed_form_neg_int_s";
    case eval_method::integral_rep: return "integral_rep";
    case eval_method::recurrence: return "recurrence";
    case eval_method::hurwitz_split: return "hurwitz_split";
  }
  return "?";
}

struct eval_result {
  cplx value{0.0};
  double abs_err = 0.0;   // rigorous for series/integral paths, heuristic for accelerated
  eval_method method = eval_method::series;
  long work = 0;          // terms summed or quadrature nodes
};

/// Parses complex literals of the form "1.5", "-2e-3", "0.8+0.2i", "1-i",
/// "2.5i", "i". Returns nullopt on malformed input (total parse, never throws).
inline std::optional<cplx> parse_complex_literal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  for (char& ch : s)
    if (ch == 'I' || ch == 'j') ch = 'i';

  auto parse_real = [](const std::string& t, double& out) -> bool {
    if (t.empty()) return false;
    try {
      size_t pos = 0;
      out = std::stod(t, &pos);
      return pos == t.size();
    } catch (...) {
      return false;
    }
  };

  if (s.back() != 'i') {
    double re;
    if (!parse_real(s, re)) return std::nullopt;
    return cplx(re, 0.0);
  }

  // pure imaginary or a+bi: find the split sign outside exponent markers
  std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  else if (im_part == "-") im_part = "-1";
  double re, im;
  if (!parse_real(re_part, re) || !parse_real(im_part, im)) return std::nullopt;
  return cplx(re, im);
}

}  // namespace lerch
