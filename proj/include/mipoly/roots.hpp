#pragma once

#include <string>
#include <vector>

#include "mipoly/laurent.hpp"

namespace mipoly {

/// A numerically located zero of a polynomial in eta, printed at the working
/// precision.
struct Root {
  std::string re;
  std::string im;
  /// 0 <= Re < 1 and |Im| < 1e-20.
  bool physical = false;
  /// |p(r)| / sum_k |c_k| |r|^k after the Newton polish.
  double scaled_residual = 0.0;
};

/// All zeros of p, sorted by ascending real part (then imaginary part).
/// Eigenvalues of the companion matrix in MPFR at `prec_bits`, followed by
/// one Newton step. Throws RootFindingFailure when a scaled residual exceeds
/// 1e-30, and Error when prec_bits < 128.
std::vector<Root> eta_roots(const EtaPoly& p, int prec_bits);

/// True when the physical zeros strictly interlace: upper has exactly one
/// more physical zero than lower and
/// u_1 < l_1 < u_2 < ... < l_k < u_{k+1}.
bool physical_zeros_interlace(const std::vector<Root>& lower, const std::vector<Root>& upper,
                              int prec_bits);

}  // namespace mipoly
