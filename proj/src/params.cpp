#include "mipoly/params.hpp"

#include <algorithm>

#include "mipoly/errors.hpp"

namespace mipoly {

std::string to_string(Family f) {
  return f == Family::LittleQJacobi ? "little-q-jacobi" : "little-q-laguerre";
}

std::string to_string(CType t) { return t == CType::TypeI ? "I" : "II"; }

Params Params::jacobi(const Rational& q, const Rational& a, const Rational& b, CType ctype,
                      int dmax) {
  return Params{Family::LittleQJacobi, ctype, q, a, b, dmax};
}

Params Params::laguerre(const Rational& q, const Rational& a, CType ctype, int dmax) {
  return Params{Family::LittleQLaguerre, ctype, q, a, Rational(0), dmax};
}

Params Params::shifted(int s1, int s2) const {
  Params out = *this;
  out.a = a * q.pow(s1);
  if (is_jacobi()) out.b = b * q.pow(s2);
  return out;
}

Params Params::plus_tilde_delta(int u) const {
  // type I: (-1, 1); type II: (1, -1). Laguerre keeps only the first entry.
  return ctype == CType::TypeI ? shifted(-u, u) : shifted(u, -u);
}

std::optional<std::string> range_violation(const Params& p, int dmax) {
  const int m = std::max(p.dmax, dmax);
  const Rational one(1);
  if (!(p.q.sign() > 0 && p.q < one)) return "q must satisfy 0 < q < 1";
  if (!p.is_jacobi() && !p.b.is_zero()) return "b must be 0 for little q-Laguerre";
  const Rational bound = p.q.pow(1 + m);
  if (p.ctype == CType::TypeI && m > 0) {
    if (!(p.a.sign() > 0 && p.a < bound)) return "type I requires 0 < a < q^(1+dmax)";
  } else if (!(p.a.sign() > 0 && p.a < one)) {
    return "a must satisfy 0 < a < 1";
  }
  if (p.is_jacobi()) {
    if (p.ctype == CType::TypeII && m > 0) {
      if (!(p.b < bound)) return "type II requires b < q^(1+dmax)";
    } else if (!(p.b < one)) {
      return "b must satisfy b < 1";
    }
  }
  return std::nullopt;
}

void require_valid(const Params& p, int dmax) {
  if (auto why = range_violation(p, dmax)) throw InvalidParams(*why);
}

bool in_strict_range(const Params& p) { return !p.is_jacobi() || p.b.sign() > 0; }

}  // namespace mipoly
