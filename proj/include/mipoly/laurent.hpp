#pragma once

#include <map>
#include <vector>

#include "mipoly/rational.hpp"

namespace mipoly {

/// Finite Laurent polynomial in the formal variable y, which stands for q^x.
///
/// A function of the lattice coordinate x that is a finite combination of
/// q^{d x} is stored as the map d -> c_d. Zero coefficients are never stored.
/// The shift x -> x + s becomes y -> y q^s (see shift_x).
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int degree);
  /// The variable y itself.
  static LaurentPoly y() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Lowest / highest stored degree; 0 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  Rational coeff(int degree) const;
  bool has_negative_powers() const { return !terms_.empty() && terms_.begin()->first < 0; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const Rational& lhs, LaurentPoly rhs) { return rhs *= lhs; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  void add_term(int degree, const Rational& coeff);

  Terms terms_;
};

/// Polynomial in eta = 1 - y, coefficients lowest degree first, trailing
/// zeros trimmed (the zero polynomial has no coefficients).
class EtaPoly {
 public:
  EtaPoly() = default;
  explicit EtaPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading() const;
  Rational coeff(int k) const;
  Rational eval(const Rational& eta) const;

  friend bool operator==(const EtaPoly& lhs, const EtaPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// x -> x + s, i.e. the coefficient of y^d is multiplied by q^{d s}.
LaurentPoly shift_x(const LaurentPoly& p, int s, const Rational& q);

/// Exact value of p at the integer lattice point x (y = q^x).
Rational eval_int_x(const LaurentPoly& p, int x, const Rational& q);

/// The x -> infinity limit (y -> 0): the constant coefficient.
/// Throws NegativePowers when p contains y^d with d < 0.
Rational eval_infinity(const LaurentPoly& p);

/// Change of basis y = 1 - eta. Throws NegativePowers for genuine Laurent input.
EtaPoly to_eta(const LaurentPoly& p);
LaurentPoly from_eta(const EtaPoly& p);

/// Exact quotient num / den; throws InternalInvariantError when the
/// division leaves a remainder and DivisionByZero when den is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant of a square matrix of Laurent polynomials. Cofactor expansion
/// for size <= 3, fraction-free Bareiss elimination above that.
/// The empty matrix has determinant 1.
LaurentPoly det_laurent(const LaurentMatrix& m);

}  // namespace mipoly
