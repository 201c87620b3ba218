#include "mipoly/laurent.hpp"

#include <utility>

#include "mipoly/errors.hpp"

namespace mipoly {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int degree) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(degree, coeff);
  return p;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int degree, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [d1, c1] : lhs.terms_) {
    for (const auto& [d2, c2] : rhs.terms_) out.add_term(d1 + d2, c1 * c2);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

EtaPoly::EtaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational EtaPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational EtaPoly::coeff(int k) const {
  return (k < 0 || k >= static_cast<int>(coeffs_.size())) ? Rational(0) : coeffs_[k];
}

Rational EtaPoly::eval(const Rational& eta) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * eta + *it;
  return acc;
}

LaurentPoly shift_x(const LaurentPoly& p, int s, const Rational& q) {
  if (s == 0) return p;
  const Rational qs = q.pow(s);
  LaurentPoly out;
  for (const auto& [d, c] : p.terms()) out += LaurentPoly::monomial(c * qs.pow(d), d);
  return out;
}

Rational eval_int_x(const LaurentPoly& p, int x, const Rational& q) {
  const Rational yx = q.pow(x);
  Rational sum;
  for (const auto& [d, c] : p.terms()) sum += c * yx.pow(d);
  return sum;
}

Rational eval_infinity(const LaurentPoly& p) {
  if (p.has_negative_powers()) throw NegativePowers("x -> infinity limit diverges");
  return p.coeff(0);
}

namespace {

// Binomial row C(d, 0..d) as rationals.
std::vector<Rational> binomial_row(int d) {
  std::vector<Rational> row(d + 1);
  mpz_class c = 1;
  for (int k = 0; k <= d; ++k) {
    row[k] = Rational(mpq_class(c));
    c = c * (d - k) / (k + 1);
  }
  return row;
}

}  // namespace

EtaPoly to_eta(const LaurentPoly& p) {
  if (p.has_negative_powers()) throw NegativePowers("not a polynomial in eta");
  if (p.is_zero()) return EtaPoly();
  std::vector<Rational> out(p.max_degree() + 1);
  // y^d = (1 - eta)^d = sum_k C(d,k) (-1)^k eta^k
  for (const auto& [d, c] : p.terms()) {
    const auto row = binomial_row(d);
    for (int k = 0; k <= d; ++k) out[k] += (k % 2 == 0 ? c : -c) * row[k];
  }
  return EtaPoly(std::move(out));
}

LaurentPoly from_eta(const EtaPoly& p) {
  LaurentPoly out;
  const auto& cs = p.coeffs();
  for (int d = 0; d < static_cast<int>(cs.size()); ++d) {
    if (cs[d].is_zero()) continue;
    const auto row = binomial_row(d);
    for (int k = 0; k <= d; ++k) {
      out += LaurentPoly::monomial((k % 2 == 0 ? cs[d] : -cs[d]) * row[k], k);
    }
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (num.is_zero()) return LaurentPoly();
  // Normalise both to ordinary polynomials with nonzero constant term.
  const int den_low = den.min_degree();
  const int den_deg = den.max_degree() - den_low;
  const Rational den_lead = den.terms().rbegin()->second;

  std::map<int, Rational> rem;
  for (const auto& [d, c] : num.terms()) rem.emplace(d - num.min_degree(), c);
  LaurentPoly quotient;
  while (!rem.empty()) {
    const auto [top, top_c] = *rem.rbegin();
    if (top < den_deg) break;
    const int qdeg = top - den_deg;
    const Rational qc = top_c / den_lead;
    quotient += LaurentPoly::monomial(qc, qdeg);
    for (const auto& [d, c] : den.terms()) {
      const int deg = d - den_low + qdeg;
      auto [it, inserted] = rem.try_emplace(deg, -(qc * c));
      if (!inserted) {
        it->second -= qc * c;
      }
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  if (!rem.empty()) throw InternalInvariantError("inexact Laurent polynomial division");
  const int shift = num.min_degree() - den_low;
  LaurentPoly out;
  for (const auto& [d, c] : quotient.terms()) out += LaurentPoly::monomial(c, d + shift);
  return out;
}

namespace {

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  LaurentPoly sum;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    LaurentMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * det_cofactor(minor);
    if (col % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

LaurentPoly det_bareiss(LaurentMatrix a) {
  const std::size_t n = a.size();
  bool negate = false;
  LaurentPoly prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev_pivot);
      }
      a[i][k] = LaurentPoly();
    }
    prev_pivot = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

LaurentPoly det_laurent(const LaurentMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error("det_laurent: matrix is not square");
  }
  if (m.size() <= 3) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace mipoly
