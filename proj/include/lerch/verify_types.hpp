#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lerch/core.hpp"

namespace lerch {

using param_map = std::map<std::string, cplx>;

/// One identity instantiated at concrete parameters.
struct identity_case {
  std::string id;
  param_map params;
  std::map<std::string, int> branch;  // factor key -> 2*pi*i branch index
  double tol_abs = 0.0;               // 0 = use the registry default
  double tol_rel = 0.0;
};

struct identity_report {
  identity_case kase;
  cplx lhs{0.0};
  cplx rhs{0.0};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
  std::string notes;
};

/// How the two sides are compared.
///  value    - plain |lhs - rhs|
///  modulus  - | |lhs| - |rhs| | (product identities whose phase is only
///             defined up to a unimodular branch factor)
///  log_mod_2pi - residual reduced by the nearest multiple of 2*pi*i
enum class compare_mode { value, modulus, log_mod_2pi };

inline void fill_residuals(identity_report& r, compare_mode mode) {
  cplx diff = r.lhs - r.rhs;
  switch (mode) {
    case compare_mode::value:
      break;
    case compare_mode::modulus:
      diff = std::abs(r.lhs) - std::abs(r.rhs);
      break;
    case compare_mode::log_mod_2pi: {
      double k = std::round(diff.imag() / (2.0 * constants::pi));
      cplx reduced = diff - cplx(0.0, 2.0 * constants::pi * k);
      if (std::abs(reduced) < std::abs(diff)) {
        diff = reduced;
        if (k != 0.0) r.notes += (r.notes.empty() ? "" : "; ") +
                                 std::string("reduced mod 2*pi*i, k=") + std::to_string(long(k));
      }
      break;
    }
  }
  r.abs_residual = std::abs(diff);
  double scale = std::abs(r.rhs);
  r.rel_residual = scale > 0.0 ? r.abs_residual / scale : r.abs_residual;
  r.pass = (r.abs_residual <= r.kase.tol_abs) || (r.rel_residual <= r.kase.tol_rel);
}

/// One row of the quotient-gamma table: argument lists are rationals (num/28
/// style), the quotient is raised to `multiplicity`, and `sign` records the
/// printed sign in front of the quotient.
struct table1_row {
  int index = 0;
  std::vector<std::pair<int, int>> numerator_args;    // (p, q) for p/q
  std::vector<std::pair<int, int>> denominator_args;
  int multiplicity = 1;
  int sign = 1;
  cplx closed_form_value{0.0};
  std::string closed_form_text;
};

struct figure_sample {
  cplx r{0.0};
  cplx f{0.0};
  bool near_pole = false;
};

}  // namespace lerch
