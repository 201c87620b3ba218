#pragma once

#include <vector>

#include "mipoly/laurent.hpp"
#include "mipoly/rational.hpp"

namespace mipoly {

/// (z;q)_n = prod_{k=0}^{n-1} (1 - z q^k); (z;q)_0 = 1.
Rational qpoch(const Rational& z, const Rational& q, int n);

/// Terminating basic hypergeometric series r phi s (upper; lower; q; z),
/// summed for k = 0..nterms with the standard ((-1)^k q^{k(k-1)/2})^{1+s-r}
/// factor. Summation stops early once an upper Pochhammer vanishes.
/// Throws ZeroDenominator if a lower Pochhammer vanishes before that.
Rational phi_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& q, const Rational& z, int nterms);

/// Same series with argument z = zcoeff * y^zdegree, returned as a Laurent
/// polynomial in y.
LaurentPoly phi_terminating_poly(const std::vector<Rational>& upper,
                                 const std::vector<Rational>& lower, const Rational& q,
                                 const Rational& zcoeff, int zdegree, int nterms);

}  // namespace mipoly
