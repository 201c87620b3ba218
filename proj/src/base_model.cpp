#include "mipoly/base_model.hpp"

#include <cmath>
#include <string>

#include "mipoly/errors.hpp"
#include "mipoly/qseries.hpp"

namespace mipoly {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw InvalidParams(std::string("vanishing denominator in ") + what);
  return num / den;
}

}  // namespace

Rational energy(int n, const Params& p) {
  const Rational base = p.q.pow(-n) - 1;
  if (!p.is_jacobi()) return base;
  return base * (Rational(1) - p.a * p.b * p.q.pow(n - 1));
}

LaurentPoly potential_B(const Params& p) {
  const Rational c = p.a / p.q;
  if (!p.is_jacobi()) return LaurentPoly::monomial(c, -1);
  return LaurentPoly::monomial(c, -1) - LaurentPoly(c * p.b);
}

LaurentPoly potential_D(const Params& /*p*/) {
  return LaurentPoly::monomial(1, -1) - LaurentPoly(1);
}

Rational eigenpoly_value_at_infinity(int n, const Params& p) {
  Rational c = (-p.a).pow(-n) * p.q.pow(-binom2(n)) * qpoch(p.a, p.q, n);
  if (p.is_jacobi()) c = checked_div(c, qpoch(p.b, p.q, n), "c'_n");
  return c;
}

Rational eigenpoly_leading(int n, const Params& p) {
  Rational c = (-p.a).pow(-n) * p.q.pow(-static_cast<long>(n) * (n - 1));
  if (p.is_jacobi()) {
    c *= qpoch(p.a * p.b * p.q.pow(n - 1), p.q, n);
    c = checked_div(c, qpoch(p.b, p.q, n), "c_n");
  }
  return c;
}

LaurentPoly eigenpoly_y(int n, const Params& p) {
  if (n < 0) return LaurentPoly();
  const Rational second = p.is_jacobi() ? p.a * p.b * p.q.pow(n - 1) : Rational(0);
  LaurentPoly series;
  try {
    series = phi_terminating_poly({p.q.pow(-n), second}, {p.a}, p.q, p.q, 1, n);
  } catch (const ZeroDenominator& e) {
    throw InvalidParams(std::string("eigenpolynomial: ") + e.what());
  }
  return series * eigenpoly_value_at_infinity(n, p);
}

EtaPoly eigenpoly(int n, const Params& p) { return to_eta(eigenpoly_y(n, p)); }

Rational groundstate_sq(int x, const Params& p) {
  Rational v(1);
  Rational qx(1);
  for (int k = 0; k < x; ++k) {
    // phi0^2(k+1)/phi0^2(k) = a (1 - b q^k) / (1 - q^{k+1})
    const Rational next_qx = qx * p.q;
    v *= p.a * (Rational(1) - p.b * qx) / (Rational(1) - next_qx);
    qx = next_qx;
  }
  return v;
}

Rational norm_dn_sq_ratio(int n, const Params& p) {
  const Rational& q = p.q;
  const Rational& a = p.a;
  Rational r = a.pow(n) * q.pow(static_cast<long>(n) * (n - 1));
  r = checked_div(r, qpoch(a, q, n) * qpoch(q, q, n), "d_n^2");
  if (p.is_jacobi()) {
    const Rational ab = a * p.b;
    r *= qpoch(p.b, q, n) * qpoch(ab, q, n);
    // (1 - ab q^{2n-1}) / (1 - ab q^{n-1}), divided by its n = 0 value (= 1).
    r *= checked_div(Rational(1) - ab * q.pow(2 * n - 1), Rational(1) - ab * q.pow(n - 1),
                     "d_n^2");
  }
  return r;
}

double norm_dn_sq_approx(int n, const Params& p, int factors, double* remainder_bound) {
  // (a;q)_inf / (ab;q)_inf, truncated. Each omitted factor is within
  // |z| q^k of 1, so the relative error is bounded by ~ sum |z| q^k.
  long double prod = 1.0L;
  const long double q = p.q.to_double();
  const long double a = p.a.to_double();
  const long double ab = a * p.b.to_double();
  long double qk = 1.0L;
  for (int k = 0; k < factors; ++k) {
    prod *= (1.0L - a * qk) / (1.0L - ab * qk);
    qk *= q;
  }
  if (remainder_bound != nullptr) {
    const long double tail = (std::fabs(a) + std::fabs(ab)) * qk / (1.0L - q);
    *remainder_bound = static_cast<double>(2.0L * tail);
  }
  return static_cast<double>(prod) * norm_dn_sq_ratio(n, p).to_double();
}

LaurentPoly ht_apply(const LaurentPoly& f, const Params& p) {
  return potential_B(p) * (f - shift_x(f, 1, p.q)) + potential_D(p) * (f - shift_x(f, -1, p.q));
}

LaurentPoly forward_shift_apply(const LaurentPoly& f, const Params& p) {
  const Rational b0 = eval_int_x(potential_B(p), 0, p.q);
  return LaurentPoly::monomial(b0, -1) * (f - shift_x(f, 1, p.q));
}

LaurentPoly backward_shift_apply(const LaurentPoly& f, const Params& p) {
  const Rational b0 = eval_int_x(potential_B(p), 0, p.q);
  const LaurentPoly g = LaurentPoly::y() * f;
  return (potential_B(p) * g - potential_D(p) * shift_x(g, -1, p.q)) * b0.inverse();
}

LaurentPoly varphi_minus(int m, const Rational& q) {
  const long mm = m;
  return LaurentPoly::monomial(q.pow(-(mm * (mm - 1) * (2 * mm - 1) / 6)),
                               static_cast<int>(binom2(mm)));
}

}  // namespace mipoly
