#include "mipoly/qseries.hpp"

#include "mipoly/errors.hpp"

namespace mipoly {

Rational qpoch(const Rational& z, const Rational& q, int n) {
  Rational result(1);
  Rational zq = z;
  for (int k = 0; k < n; ++k) {
    result *= Rational(1) - zq;
    zq *= q;
  }
  return result;
}

namespace {

// Coefficients t_k of sum_k t_k z^k, stopping after the first vanishing
// upper factor.
std::vector<Rational> series_coefficients(const std::vector<Rational>& upper,
                                          const std::vector<Rational>& lower, const Rational& q,
                                          int nterms) {
  const long extra = 1 + static_cast<long>(lower.size()) - static_cast<long>(upper.size());
  std::vector<Rational> out;
  Rational term(1);
  Rational qk(1);  // q^k
  for (int k = 0; k <= nterms; ++k) {
    if (k > 0) {
      const Rational prev_qk = qk / q;  // q^{k-1}
      Rational num(1);
      for (const auto& u : upper) num *= Rational(1) - u * prev_qk;
      Rational den = Rational(1) - qk;
      for (const auto& l : lower) den *= Rational(1) - l * prev_qk;
      if (num.is_zero()) break;
      if (den.is_zero()) throw ZeroDenominator("lower Pochhammer vanishes before termination");
      // ((-1)^k q^{k(k-1)/2})^extra picks up (-q^{k-1})^extra at step k.
      term *= num / den;
      term *= (-prev_qk).pow(extra);
    }
    out.push_back(term);
    qk *= q;
  }
  return out;
}

}  // namespace

Rational phi_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& q, const Rational& z, int nterms) {
  Rational sum;
  Rational zk(1);
  for (const auto& t : series_coefficients(upper, lower, q, nterms)) {
    sum += t * zk;
    zk *= z;
  }
  return sum;
}

LaurentPoly phi_terminating_poly(const std::vector<Rational>& upper,
                                 const std::vector<Rational>& lower, const Rational& q,
                                 const Rational& zcoeff, int zdegree, int nterms) {
  LaurentPoly sum;
  Rational zk(1);
  int k = 0;
  for (const auto& t : series_coefficients(upper, lower, q, nterms)) {
    sum += LaurentPoly::monomial(t * zk, k * zdegree);
    zk *= zcoeff;
    ++k;
  }
  return sum;
}

}  // namespace mipoly
