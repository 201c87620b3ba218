#include "mipoly/virtual_states.hpp"

#include <algorithm>
#include <string>

#include "mipoly/base_model.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/qseries.hpp"

namespace mipoly {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw InvalidParams(std::string("vanishing denominator in ") + what);
  return num / den;
}

// prod_{i<k} (b - a q^{v+1+i}) = (a b^{-1} q^{v+1}; q)_k b^k, written so that
// b = 0 is regular.
Rational regular_pochhammer(int v, int k, const Params& p) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= p.b - p.a * p.q.pow(v + 1 + i);
  return r;
}

}  // namespace

namespace detail {

Params twist_type_one(const Params& p) {
  Params t = p;
  t.a = p.q * p.q / p.a;
  return t;
}

VirtualData virtual_data(const Params& p) {
  const Rational& q = p.q;
  const Rational& a = p.a;
  const Rational& b = p.b;
  VirtualData vd;
  vd.ctype = p.ctype;
  vd.family = p.family;
  if (p.ctype == CType::TypeII) {
    // alpha = b/q: B'new = a(q^{-x-1} - 1), D'new = q^{-x} - b/q, alpha' = -(1-a)(1-b/q).
    vd.bprime_new = LaurentPoly::monomial(a / q, -1) - LaurentPoly(a);
    vd.dprime_new = LaurentPoly::monomial(1, -1) - LaurentPoly(b / q);
    vd.alpha_prime = -(Rational(1) - a) * (Rational(1) - b / q);
  } else {
    // alpha = a/q, B' = B(x; t(lambda)), D' = D.
    vd.bprime_new = LaurentPoly::monomial(1, -1) - LaurentPoly(b);
    vd.dprime_new = (LaurentPoly::monomial(1, -1) - LaurentPoly(1)) * (a / q);
    vd.alpha_prime = -(Rational(1) - a / q) * (Rational(1) - b);
  }
  return vd;
}

LaurentPoly xi_poly(int v, const Params& p) {
  if (p.ctype == CType::TypeI) return eigenpoly_y(v, twist_type_one(p));
  const Rational& q = p.q;
  if (!p.is_jacobi()) {
    // (a;q)_v 1phi1(q^{-v}; a; q; a q^{x+v+1})
    try {
      return phi_terminating_poly({q.pow(-v)}, {p.a}, q, p.a * q.pow(v + 1), 1, v) *
             qpoch(p.a, q, v);
    } catch (const ZeroDenominator& e) {
      throw InvalidParams(std::string("virtual state polynomial: ") + e.what());
    }
  }
  // tilde-c'_v 2phi1(q^{-v}, a b^{-1} q^{v+1}; a; q; b y) with the b-powers
  // absorbed into the upper Pochhammer.
  const Rational cprime = xi_value_at_infinity(v, p);
  LaurentPoly out;
  Rational upper(1);   // (q^{-v};q)_k
  Rational lower(1);   // (a;q)_k (q;q)_k
  for (int k = 0; k <= v; ++k) {
    if (k > 0) {
      upper *= Rational(1) - q.pow(-v + k - 1);
      lower *= (Rational(1) - p.a * q.pow(k - 1)) * (Rational(1) - q.pow(k));
    }
    const Rational t = checked_div(upper * regular_pochhammer(v, k, p), lower, "xi_v");
    out += LaurentPoly::monomial(t * cprime, k);
  }
  return out;
}

Rational virtual_energy(int v, const Params& p) {
  const Rational& q = p.q;
  if (p.ctype == CType::TypeI) {
    // alpha E_v(t(lambda)) + alpha', which factorises as -(1 - a q^{-v-1})(1 - b q^v).
    return -(Rational(1) - p.a * q.pow(-v - 1)) * (Rational(1) - p.b * q.pow(v));
  }
  const Rational base = -(Rational(1) - p.a * q.pow(v));
  if (!p.is_jacobi()) return base;
  return base * (Rational(1) - p.b * q.pow(-1 - v));
}

}  // namespace detail

VirtualData virtual_data(const Params& p) {
  require_valid(p);
  return detail::virtual_data(p);
}

VirtualPoly xi_poly(int v, const Params& p) {
  require_valid(p, v);
  return VirtualPoly{v, detail::xi_poly(v, p), p.ctype};
}

Rational virtual_energy(int v, const Params& p) {
  require_valid(p, v);
  return detail::virtual_energy(v, p);
}

Rational virtual_energy_prime_new(int v, const Params& p) {
  return detail::virtual_energy(v, p) - detail::virtual_data(p).alpha_prime;
}

LaurentPoly xi_diffeq_residual(int v, const Params& p) {
  const VirtualData vd = detail::virtual_data(p);
  const LaurentPoly xi = detail::xi_poly(v, p);
  return vd.bprime_new * (xi - shift_x(xi, 1, p.q)) +
         vd.dprime_new * (xi - shift_x(xi, -1, p.q)) - xi * virtual_energy_prime_new(v, p);
}

Rational xi_value_at_infinity(int v, const Params& p) {
  const Rational num = qpoch(p.a, p.q, v);
  if (!p.is_jacobi()) return num;
  return checked_div(num, qpoch(p.b * p.q.pow(-v - 1), p.q, v), "tilde-c'_v");
}

Rational xi_leading(int v, const Params& p) {
  const Rational& q = p.q;
  if (!p.is_jacobi()) return (-p.a).pow(v) * q.pow(static_cast<long>(v) * v);
  // b^v q^{-C(v+1,2)} (a b^{-1} q^{v+1}; q)_v / (b q^{-v-1}; q)_v
  const Rational num = regular_pochhammer(v, v, p) * q.pow(-(static_cast<long>(v) * (v + 1) / 2));
  return checked_div(num, qpoch(p.b * q.pow(-v - 1), q, v), "tilde-c_v");
}

Rational nu_value(int x, const Params& p) {
  if (p.ctype == CType::TypeI) return (p.a / p.q).pow(x);
  return checked_div(qpoch(p.b, p.q, x), qpoch(p.q, p.q, x), "nu");
}

Rational phi0_tilde_sq(int x, const Params& p) {
  const Rational nu = nu_value(x, p);
  return checked_div(groundstate_sq(x, p), nu * nu, "tilde-phi_0");
}

LaurentPoly r_factor(int j, int m, const Params& p) {
  if (j < 1 || j > m + 1) throw Error("r_factor: row index out of range");
  const Rational& q = p.q;
  LaurentPoly out(1);
  // (b q^{-M} y; q)_{M-j+1}
  for (int k = 0; k <= m - j; ++k) {
    out *= LaurentPoly(1) - LaurentPoly::monomial(p.b * q.pow(-m + k), 1);
  }
  // (q^{2-j} y; q)_{j-1}
  for (int k = 0; k < j - 1; ++k) {
    out *= LaurentPoly(1) - LaurentPoly::monomial(q.pow(2 - j + k), 1);
  }
  return out * checked_div(Rational(1), qpoch(p.b * q.pow(-m), q, m), "r_j");
}

}  // namespace mipoly
