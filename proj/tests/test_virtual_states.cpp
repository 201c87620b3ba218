#include <gtest/gtest.h>

#include "mipoly/base_model.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/qseries.hpp"
#include "mipoly/virtual_states.hpp"

using namespace mipoly;

namespace {

Params jacobi_default() { return Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(1, 16)); }
Params jacobi_small_b() { return Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(1, 128)); }
Params laguerre_default() { return Params::laguerre(Rational(1, 2), Rational(1, 3)); }

}  // namespace

TEST(VirtualData, FactorisationOfPotentials) {
  for (const Params& p : {jacobi_default(), laguerre_default()}) {
    const VirtualData v = virtual_data(p);
    const LaurentPoly b = potential_B(p), d = potential_D(p);
    EXPECT_TRUE((b * shift_x(d, 1, p.q) - v.bprime_new * shift_x(v.dprime_new, 1, p.q)).is_zero());
    EXPECT_TRUE((b + d - v.bprime_new - v.dprime_new - LaurentPoly(v.alpha_prime)).is_zero());
    EXPECT_EQ(eval_int_x(v.bprime_new, -1, p.q), Rational(0));
    EXPECT_LT(v.alpha_prime, Rational(0));
  }
  EXPECT_EQ(virtual_data(jacobi_default()).alpha_prime, Rational(-7, 12));
}

TEST(VirtualData, RejectsOutOfRange) {
  EXPECT_THROW(virtual_data(Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(2))),
               InvalidParams);
}

TEST(XiPoly, Normalisation) {
  const Params p = jacobi_default();
  EXPECT_EQ(xi_poly(0, p).poly, LaurentPoly(1));
  EXPECT_EQ(eval_int_x(xi_poly(2, p).poly, -1, p.q), Rational(1));
  // tilde-c_1 = b q^-1 (1 - a b^-1 q^2) / (1 - b q^-2)
  const Rational q = p.q, a = p.a, b = p.b;
  EXPECT_EQ(xi_leading(1, p), b / q * (1 - a / b * q * q) / (1 - b / (q * q)));
  const Params wide = jacobi_small_b();
  for (int v = 0; v <= 4; ++v) {
    EXPECT_EQ(to_eta(xi_poly(v, wide).poly).degree(), v);
    EXPECT_EQ(to_eta(xi_poly(v, wide).poly).leading(), xi_leading(v, wide));
    EXPECT_EQ(eval_infinity(xi_poly(v, wide).poly), xi_value_at_infinity(v, wide));
  }
}

TEST(XiPoly, DifferenceEquationAndBoundaryValue) {
  for (const Params& p : {jacobi_small_b(), laguerre_default()}) {
    for (int v = 0; v <= 4; ++v) {
      EXPECT_TRUE(xi_diffeq_residual(v, p).is_zero()) << v;
      EXPECT_EQ(eval_int_x(xi_poly(v, p).poly, -1, p.q), Rational(1));
    }
  }
}

TEST(XiPoly, AgainstSeriesForms) {
  const Params p = jacobi_small_b();
  const Rational q = p.q;
  for (int v = 0; v <= 4; ++v) {
    const LaurentPoly xi = xi_poly(v, p).poly;
    // 2phi1 with argument b y
    const LaurentPoly two = phi_terminating_poly({q.pow(-v), p.a / p.b * q.pow(v + 1)}, {p.a}, q,
                                                 p.b, 1, v) *
                            xi_value_at_infinity(v, p);
    EXPECT_EQ(xi, two) << v;
    // 3phi2 form at x = 3
    const int x = 3;
    const Rational three =
        xi_value_at_infinity(v, p) * qpoch(q.pow(x + 1), q, v) *
        phi_terminating({q.pow(-v), p.b * q.pow(-v - 1), Rational(0)}, {p.a, q.pow(-v - x)}, q, q, v);
    EXPECT_EQ(eval_int_x(xi, x, q), three) << v;
  }
}

TEST(VirtualEnergy, Values) {
  EXPECT_EQ(virtual_energy(2, jacobi_default()), Rational(-11, 24));
  for (int v = 0; v <= 4; ++v) {
    EXPECT_LT(virtual_energy(v, jacobi_small_b()), Rational(0));
    EXPECT_LT(virtual_energy(v, laguerre_default()), Rational(0));
  }
  const Params lag = laguerre_default();
  EXPECT_EQ(virtual_energy_prime_new(3, lag), -lag.a * (1 - lag.q.pow(3)));
}

TEST(VirtualEnergy, TypeOneViaTwist) {
  const Params p = Params::jacobi(Rational(1, 2), Rational(1, 40), Rational(1, 3), CType::TypeI);
  const Params t = detail::twist_type_one(p);
  EXPECT_EQ(t.a, p.q * p.q / p.a);
  EXPECT_EQ(t.b, p.b);
  for (int v = 1; v <= 3; ++v) {
    EXPECT_TRUE(xi_diffeq_residual(v, p).is_zero());
    EXPECT_EQ(eval_int_x(xi_poly(v, p).poly, 0, p.q), Rational(1));
    EXPECT_LT(virtual_energy(v, p), Rational(0));
  }
}

TEST(Nu, Values) {
  EXPECT_EQ(nu_value(0, jacobi_default()), Rational(1));
  EXPECT_EQ(nu_value(2, jacobi_default()), Rational(155, 64));
  EXPECT_EQ(phi0_tilde_sq(0, jacobi_default()), Rational(1));
  // nu^2 = phi_0^2 / tilde-phi_0^2
  const Params p = jacobi_default();
  for (int x = 0; x <= 5; ++x) {
    EXPECT_EQ(nu_value(x, p) * nu_value(x, p), groundstate_sq(x, p) / phi0_tilde_sq(x, p));
  }
}

TEST(RFactor, ClosedForms) {
  EXPECT_EQ(r_factor(1, 1, laguerre_default()), LaurentPoly(1));
  EXPECT_EQ(r_factor(2, 1, jacobi_default()),
            (LaurentPoly(1) - LaurentPoly::y()) * Rational(8, 7));
}

TEST(RFactor, MatchesNuRatio) {
  const Params p = jacobi_default();
  const int m = 2;
  const Params shifted = p.plus_tilde_delta(m);
  for (int j = 1; j <= m + 1; ++j) {
    const int x = 3 + j - 1;
    EXPECT_EQ(eval_int_x(r_factor(j, m, p), x, p.q), nu_value(3, p) / nu_value(x, shifted)) << j;
  }
}
