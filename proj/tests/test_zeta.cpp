#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lerch/zeta.hpp"

using namespace lerch;
using Catch::Approx;

namespace {
double cdist(cplx a, cplx b) { return std::abs(a - b); }
const double pi2_6 = constants::pi * constants::pi / 6.0;
}  // namespace

TEST_CASE("hurwitz zeta basic values") {
  // brute-force oracle for zeta(2,1): series + integral tail bracket
  {
    double s = 0.0;
    const long n = 200000;
    for (long k = n; k >= 1; --k) s += 1.0 / (double(k) * double(k));
    double lo = s + 1.0 / double(n + 1);             // tail > 1/(n+1)
    double hi = s + 1.0 / double(n);                 // tail < 1/n
    double z = hurwitz_zeta(2.0, 1.0).value.real();
    CHECK(z >= lo - 1e-12);
    CHECK(z <= hi + 1e-12);
    CHECK(z == Approx(pi2_6).epsilon(1e-14));
  }
  // s = 0: zeta(0, a) = 1/2 - a
  CHECK(hurwitz_zeta(0.0, 0.25).value.real() == Approx(0.25).margin(1e-14));
  CHECK(cdist(hurwitz_zeta(0.0, cplx(0.3, 0.4)).value, cplx(0.2, -0.4)) < 1e-13);
  // s = -1: -B2(a)/2 with B2(a) = a^2 - a + 1/6, independent polynomial oracle
  {
    double a = 0.3;
    double bern = -(a * a - a + 1.0 / 6.0) / 2.0;
    CHECK(hurwitz_zeta(-1.0, a).value.real() == Approx(bern).margin(5e-14));
  }
}

TEST_CASE("hurwitz zeta reference values") {
  // reference: mpmath zeta(s, a) at 40 digits; negative orders are evaluated
  // through cancelling Euler-Maclaurin pieces, hence the looser margins there
  CHECK(cdist(hurwitz_zeta(2.5, 0.7).value, cplx(2.9028675777573462196)) < 1e-13);
  CHECK(cdist(hurwitz_zeta(-1.5, 1.3).value, cplx(-0.17250232773738580854)) < 5e-13);
  CHECK(cdist(hurwitz_zeta(0.5, 2.0).value, cplx(-2.4603545088095868129)) < 1e-13);
  CHECK(cdist(hurwitz_zeta(cplx(3.0, 1.0), cplx(0.3, 0.4)).value,
              cplx(-9.8141733857265001454, -18.221091540184662692)) < 1e-11);
  CHECK(cdist(hurwitz_zeta(cplx(-2.5, 0.0), cplx(0.4, 1.1)).value,
              cplx(-0.45890357709815419923, 0.25732368265141648239)) < 5e-13);
}

TEST_CASE("hurwitz zeta error bound holds on reference points") {
  auto r1 = hurwitz_zeta(2.5, 0.7);
  CHECK(std::abs(r1.value.real() - 2.9028675777573462196) <= r1.abs_err + 1e-15);
  auto r2 = hurwitz_zeta(-1.5, 1.3);
  CHECK(std::abs(r2.value.real() + 0.17250232773738580854) <= r2.abs_err + 1e-15);
}

TEST_CASE("hurwitz zeta poles") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), pole_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), pole_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -4.0), pole_error);
}

TEST_CASE("zeta s-derivative") {
  // reference: mpmath diff at 40 digits
  CHECK(cdist(hurwitz_zeta_sderiv(0.0, 0.3).value, cplx(0.17685946161340277990)) < 1e-12);
  CHECK(cdist(hurwitz_zeta_sderiv(-1.0, 0.7).value, cplx(-0.029091420584888421565)) < 1e-12);
  CHECK(cdist(hurwitz_zeta_sderiv(2.0, 0.25).value, cplx(21.148279617539289140)) < 1e-11);
  CHECK(cdist(hurwitz_zeta_sderiv(cplx(0.5, 0.5), 1.2).value,
              cplx(-0.011593114605626894286, -2.0063767432249502612)) < 1e-12);
  CHECK(cdist(hurwitz_zeta_sderiv(2.0, 1.0).value, cplx(-0.93754825431584375370)) < 1e-12);
}

TEST_CASE("zeta'(0,a) equals log_gamma(a) - log(2 pi)/2") {
  std::mt19937 rng(3111);
  std::uniform_real_distribution<double> ur(0.05, 4.0), ui(-2.0, 2.0);
  for (int i = 0; i < 40; ++i) {
    cplx a(ur(rng), ui(rng));
    CAPTURE(a);
    CHECK(cdist(hurwitz_zeta_sderiv(0.0, a).value, hurwitz_zeta_sderiv_at0(a)) <
          1e-12 * (1.0 + std::abs(hurwitz_zeta_sderiv_at0(a))));
  }
  CHECK(cdist(hurwitz_zeta_sderiv_at0(1.0), cplx(-0.5 * constants::log_2pi)) < 1e-15);
  CHECK(cdist(hurwitz_zeta_sderiv_at0(0.5), cplx(-0.5 * std::log(2.0))) < 1e-15);
  CHECK(cdist(hurwitz_zeta_sderiv_at0(2.0), cplx(-0.5 * constants::log_2pi)) < 1e-15);
}

TEST_CASE("trigamma") {
  // brute-force tail-summed oracle at a = 1/2: sum 1/(n+1/2)^2 + integral tail
  {
    double s = 0.0;
    const long n = 1000000;
    for (long k = n - 1; k >= 0; --k) {
      double t = double(k) + 0.5;
      s += 1.0 / (t * t);
    }
    double tail_mid = 1.0 / (double(n));  // Int_n^inf dt/(t+1/2)^2 ~ 1/(n+1/2)
    double approx = s + tail_mid;
    CHECK(std::abs(trigamma(0.5).real() - approx) < 1e-5);
    CHECK(trigamma(0.5).real() == Approx(constants::pi * constants::pi / 2.0).epsilon(1e-13));
  }
  CHECK(trigamma(1.0).real() == Approx(pi2_6).epsilon(1e-13));
  CHECK(trigamma(2.0).real() == Approx(pi2_6 - 1.0).epsilon(1e-13));
  // psi1(1/4) = pi^2 + 8 C
  CHECK(trigamma(0.25).real() ==
        Approx(constants::pi * constants::pi + 8.0 * constants::catalan).epsilon(1e-13));
  CHECK(cdist(trigamma(cplx(1.5, 2.5)), cplx(0.14201480905149677415, -0.34651290779200380376)) <
        1e-13);
  CHECK(cdist(trigamma(cplx(-2.3, 0.4)), cplx(1.0081944015594983926, 2.6576604387562640548)) <
        1e-12);
  CHECK_THROWS_AS(trigamma(cplx(-7.0)), pole_error);
}

TEST_CASE("trigamma recurrence psi1(a) - psi1(a+1) = a^-2") {
  std::mt19937 rng(515);
  std::uniform_real_distribution<double> ur(-6.0, 6.0), ui(-3.0, 3.0);
  int done = 0;
  while (done < 60) {
    cplx a(ur(rng), ui(rng));
    if (std::abs(a.imag()) < 0.05 && std::abs(a.real() - std::round(a.real())) < 0.05) continue;
    cplx lhs = trigamma(a) - trigamma(a + 1.0);
    CHECK(cdist(lhs, 1.0 / (a * a)) < 1e-12 * (1.0 + std::abs(lhs)));
    ++done;
  }
}
