#pragma once

#include "mipoly/laurent.hpp"
#include "mipoly/params.hpp"
#include "mipoly/rational.hpp"

namespace mipoly {

/// Primed potentials in the rescaled ("new") normalisation
/// B'new = alpha B', D'new = alpha D', plus alpha'.
struct VirtualData {
  LaurentPoly bprime_new;
  LaurentPoly dprime_new;
  Rational alpha_prime;
  CType ctype = CType::TypeII;
  Family family = Family::LittleQJacobi;
};

/// Virtual state polynomial xi_v(x) in y. Type II is normalised to
/// xi_v(-1) = 1, type I to xi_v(0) = 1.
struct VirtualPoly {
  int v = 0;
  LaurentPoly poly;
  CType ctype = CType::TypeII;
};

/// Validates the range for p.ctype, then builds the primed potentials.
VirtualData virtual_data(const Params& p);
VirtualPoly xi_poly(int v, const Params& p);
Rational virtual_energy(int v, const Params& p);

/// B'new (xi(x) - xi(x+1)) + D'new (xi(x) - xi(x-1)) - E'new_v xi(x);
/// zero iff the virtual state difference equation holds.
LaurentPoly xi_diffeq_residual(int v, const Params& p);

/// E'new_v = alpha E'_v.
Rational virtual_energy_prime_new(int v, const Params& p);

/// Type II: tilde-c'_v = xi_v(infinity); tilde-c_v = eta^v coefficient.
Rational xi_value_at_infinity(int v, const Params& p);
Rational xi_leading(int v, const Params& p);

/// nu(x) = phi_0(x) / tilde-phi_0(x) and tilde-phi_0(x)^2 for x >= 0.
Rational nu_value(int x, const Params& p);
Rational phi0_tilde_sq(int x, const Params& p);

/// Row weight r_j of the type II Casoratian determinant, already written at
/// the base point: the returned polynomial in y = q^x equals
/// nu(x - j + 1; lambda) / nu(x; lambda + M tilde-delta).
LaurentPoly r_factor(int j, int m, const Params& p);

/// The unchecked constructors used inside the Darboux engine, where shifted
/// or twisted parameter points routinely leave the validated range.
namespace detail {
VirtualData virtual_data(const Params& p);
LaurentPoly xi_poly(int v, const Params& p);
Rational virtual_energy(int v, const Params& p);
/// Type I twist t^I: (a, b) -> (q^2 / a, b).
Params twist_type_one(const Params& p);
}  // namespace detail

}  // namespace mipoly
