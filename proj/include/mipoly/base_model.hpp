#pragma once

#include "mipoly/laurent.hpp"
#include "mipoly/params.hpp"
#include "mipoly/rational.hpp"

// Undeformed little q-Jacobi / little q-Laguerre systems on x in Z_{>=0}.
// Every function of x is a LaurentPoly in y = q^x; eta(x) = 1 - y.
namespace mipoly {

/// E_n; E_0 = 0.
Rational energy(int n, const Params& p);

/// B(x) and D(x) as Laurent polynomials in y.
LaurentPoly potential_B(const Params& p);
LaurentPoly potential_D(const Params& p);

/// c'_n = P_n(infinity).
Rational eigenpoly_value_at_infinity(int n, const Params& p);
/// c_n, the eta^n coefficient of P_n.
Rational eigenpoly_leading(int n, const Params& p);

/// P_n(x) as a polynomial in y, built from the 2phi1 form with argument q y.
/// Normalised P_n(0) = 1; n < 0 gives the zero polynomial.
LaurentPoly eigenpoly_y(int n, const Params& p);
/// P_n as a polynomial in eta.
EtaPoly eigenpoly(int n, const Params& p);

/// phi_0(x)^2 for x >= 0 via the product recurrence; phi_0(0)^2 = 1.
Rational groundstate_sq(int x, const Params& p);

/// d_n^2 / d_0^2 (the common infinite product cancels).
Rational norm_dn_sq_ratio(int n, const Params& p);

/// Approximate absolute d_n^2 using infinite products truncated after
/// `factors` factors; `remainder_bound` receives a bound on the relative
/// truncation error.
double norm_dn_sq_approx(int n, const Params& p, int factors = 256,
                         double* remainder_bound = nullptr);

/// Similarity transformed Hamiltonian B(x)(1 - e^d) + D(x)(1 - e^-d) applied to f.
LaurentPoly ht_apply(const LaurentPoly& f, const Params& p);

/// Forward shift B(0) phi(x)^{-1} (1 - e^d).
LaurentPoly forward_shift_apply(const LaurentPoly& f, const Params& p);
/// Backward shift B(0)^{-1} (B(x) - D(x) e^-d) phi(x).
LaurentPoly backward_shift_apply(const LaurentPoly& f, const Params& p);

/// varphi^(-)_M(x) = q^{C(M,2) x - M(M-1)(2M-1)/6}, a monomial in y.
LaurentPoly varphi_minus(int m, const Rational& q);

}  // namespace mipoly
