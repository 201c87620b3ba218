#pragma once

#include <optional>
#include <string>

#include "mipoly/rational.hpp"

namespace mipoly {

enum class Family { LittleQJacobi, LittleQLaguerre };
enum class CType { TypeI, TypeII };

std::string to_string(Family f);
std::string to_string(CType t);

/// Exact parameter point of a little q-Jacobi (q^lambda = (a, b)) or little
/// q-Laguerre (q^lambda = a, b == 0) system, together with the construction
/// type and the largest virtual index that will be used.
///
/// Params is a plain value. Shifted or twisted points produced internally
/// (lambda + delta, lambda + M tilde-delta, t(lambda), q -> 1/q) are not
/// required to satisfy the range conditions; use validate() at entry points.
struct Params {
  Family family = Family::LittleQJacobi;
  CType ctype = CType::TypeII;
  Rational q{1, 2};
  Rational a{1, 3};
  Rational b{1, 16};
  int dmax = 0;

  static Params jacobi(const Rational& q, const Rational& a, const Rational& b,
                       CType ctype = CType::TypeII, int dmax = 0);
  static Params laguerre(const Rational& q, const Rational& a, CType ctype = CType::TypeII,
                         int dmax = 0);

  bool is_jacobi() const { return family == Family::LittleQJacobi; }

  /// (a, b) -> (a q^s1, b q^s2); for little q-Laguerre only a is moved.
  Params shifted(int s1, int s2) const;
  /// lambda + delta.
  Params plus_delta() const { return shifted(1, 1); }
  /// lambda + u tilde-delta for the current construction type.
  Params plus_tilde_delta(int u) const;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Describes the first violated range condition, or nullopt when p is in
/// range for its family, construction type and max(p.dmax, dmax).
std::optional<std::string> range_violation(const Params& p, int dmax = 0);

/// Throws InvalidParams with the range_violation message.
void require_valid(const Params& p, int dmax = 0);

/// True when the point lies in the sub-range where positivity of the type II
/// virtual state polynomials is proved (0 < b for little q-Jacobi); the
/// extended range b <= 0 is valid but positivity is only checked there.
bool in_strict_range(const Params& p);

}  // namespace mipoly
