#pragma once

#include <string>
#include <vector>

#include "mipoly/laurent.hpp"
#include "mipoly/params.hpp"
#include "mipoly/rational.hpp"
#include "mipoly/virtual_states.hpp"

// Multi-step Darboux transformations of the little q-Jacobi / q-Laguerre
// systems with virtual state seeds. Type II is fully normalised; type I is
// exposed at the Casoratian level only.
namespace mipoly {

/// Virtual state labels d_1, ..., d_M.
///
/// Strict sets are sorted, distinct and start at 1. Raw sets keep the given
/// order and allow 0; they exist for the permutation and reduction checks.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws InvalidParams when `indices` violates the strict rules.
  explicit IndexSet(std::vector<int> indices);
  /// Distinct non-negative labels in any order.
  static IndexSet raw(std::vector<int> indices);
  /// Comma separated labels, e.g. "1,3,5"; the empty string is the empty set.
  static IndexSet parse(const std::string& text);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool is_raw() const { return raw_; }
  int max_index() const;
  /// sum d_j - M(M-1)/2, the degree of the denominator polynomial.
  int ell() const;
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
  bool raw_ = false;
};

/// A rational function of x stored as numerator / denominator in y.
struct RationalFunction {
  LaurentPoly num;
  LaurentPoly den{1};
  /// Throws DenominatorZeroAtInteger when den vanishes at x.
  Rational eval(int x, const Rational& q) const;
};

/// Equality as rational functions (cross multiplication).
bool same_function(const RationalFunction& lhs, const RationalFunction& rhs);

struct DeformedPotentials {
  RationalFunction b;
  RationalFunction d;
};

/// Casorati determinants: W_C rows are f_k(x + j - 1), W^(-)_C rows are
/// f_k(x - j + 1). The empty list gives 1.
LaurentPoly casoratian_plus(const std::vector<LaurentPoly>& fs, const Rational& q);
LaurentPoly casoratian_minus(const std::vector<LaurentPoly>& fs, const Rational& q);

/// Type II deformed system at a validated parameter point.
struct DeformedSystem {
  Params params;
  IndexSet dset;
  std::vector<VirtualPoly> xi_polys;
  LaurentPoly xi_cas;
  EtaPoly xi_denom;
  Rational cd;
  Rational cdn;
};

DeformedSystem make_deformed(const IndexSet& d, const Params& p);

/// Normalisation constants of the type II Casoratians.
Rational cd_constant(const IndexSet& d, const Params& p);
Rational cdn_constant(const IndexSet& d, const Params& p);

/// Denominator polynomial, normalised to 1 at x = -1.
EtaPoly denominator_poly(const IndexSet& d, const Params& p);
/// Multi-indexed polynomial, normalised to 1 at x = 0; zero for n < 0.
EtaPoly multi_indexed_poly(const IndexSet& d, int n, const Params& p);

/// Closed-form leading eta coefficients and x -> infinity values.
Rational denominator_leading(const IndexSet& d, const Params& p);
Rational multi_indexed_leading(const IndexSet& d, int n, const Params& p);
struct InfinityValues {
  Rational xi_inf;
  Rational p_inf;
};
InfinityValues infinity_values(const IndexSet& d, int n, const Params& p);

/// P_{D,0}(x; lambda) - Xi_D(x - 1; lambda + delta).
EtaPoly lowest_matches_denominator(const IndexSet& d, const Params& p);

/// Type II: closed form through denominator polynomials.
/// Type I: raw Casoratian form.
DeformedPotentials deformed_potentials(const IndexSet& d, const Params& p);
/// Type II potentials rebuilt from the raw Casoratians and the nu ratios.
DeformedPotentials deformed_potentials_casoratian(const IndexSet& d, const Params& p);

/// Residuals of the eigen equation and the two shift relations with every
/// denominator cleared; each is zero iff the identity holds.
LaurentPoly deformed_eigencheck(const IndexSet& d, int n, const Params& p);
LaurentPoly deformed_forward_check(const IndexSet& d, int n, const Params& p);
LaurentPoly deformed_backward_check(const IndexSet& d, int n, const Params& p);

/// psi_D(x)^2 from the closed form, and from the ground state product
/// prod_{s<x} B_D(s) / D_D(s+1) divided by P_{D,0}(x)^2.
Rational psi_d_sq(int x, const IndexSet& d, const Params& p);
Rational psi_d_sq_product(int x, const IndexSet& d, const Params& p);

/// Orthogonality weight phi_0(x; lambda + M tilde-delta)^2 / (Xi(x) Xi(x-1)).
Rational orthogonality_weight(int x, const IndexSet& d, const Params& p);

/// Norm factor tilde-d_{D,n}^2.
Rational dtilde_sq(const IndexSet& d, int n, const Params& p);

/// Raw type I system: W_C of the seeds and the potentials.
struct TypeISystem {
  Params params;
  IndexSet dset;
  LaurentPoly xi_cas;
  DeformedPotentials potentials;
};

TypeISystem typeI_deformed(const IndexSet& d, const Params& p);
/// W_C[xi_{d_1}, ..., xi_{d_M}, nu P_n](x) / nu(x).
LaurentPoly typeI_raw_poly(const IndexSet& d, int n, const Params& p);
/// Eigen equation of the raw type I system, denominators cleared.
LaurentPoly typeI_eigencheck(const IndexSet& d, int n, const Params& p);
/// Orthogonality weight of the raw type I polynomials at x, and the matching
/// norm prod_j (E_n - tilde-E_{d_j}) / d_n^2 relative to d_0^2.
Rational typeI_weight(int x, const IndexSet& d, const Params& p);
Rational typeI_norm_ratio(const IndexSet& d, int n, const Params& p);

/// Normalised single-indexed closed forms for D = {d}.
LaurentPoly typeI_single(int d, int n, const Params& p);
LaurentPoly typeII_single(int d, int n, const Params& p);

/// Unchecked variants for shifted, twisted or reflected parameter points.
namespace detail {
Rational cd_constant(const IndexSet& d, const Params& p);
Rational cdn_constant(const IndexSet& d, const Params& p);
LaurentPoly denominator_y(const IndexSet& d, const Params& p);
LaurentPoly multi_indexed_y(const IndexSet& d, int n, const Params& p);
LaurentPoly typeI_raw_poly(const IndexSet& d, int n, const Params& p);
LaurentPoly typeI_single(int d, int n, const Params& p);
}  // namespace detail

}  // namespace mipoly
