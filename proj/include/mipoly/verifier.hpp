#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mipoly/darboux.hpp"
#include "mipoly/laurent.hpp"
#include "mipoly/params.hpp"
#include "mipoly/rational.hpp"
#include "mipoly/roots.hpp"

namespace mipoly {

enum class Status { Pass, Fail, Warn };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  std::optional<double> bound;
};

struct VerificationReport {
  std::vector<Check> checks;
  Params params_echo;
  IndexSet dset_echo;

  /// False iff some check failed; warnings do not fail a report.
  bool passed() const;
  void append(std::vector<Check> more);
};

/// Geometric tail estimate for a series of positive terms t(x).
struct TailBound {
  int truncation_x = 0;
  Rational partial_sum;
  Rational ratio_bound;
  Rational tail_estimate;
};

/// Exact partial sums S_{nm} = sum_x w(x) p_n(x) p_m(x) with a certified tail.
///
/// The envelope t(x) = |w(x)| max_n p_n(x)^2 dominates every |w p_n p_m|.
/// Summation stops at the first X >= min_x where t(x+1) <= rho t(x) held for
/// the last 8 steps and t(X) rho / (1 - rho) <= eps S_00.
/// Throws NonConvergence when that does not happen within max_terms terms.
struct OrthogonalitySums {
  std::vector<std::vector<Rational>> sums;
  TailBound tail;
};
OrthogonalitySums orthogonality_sums(const std::function<Rational(int)>& weight,
                                     const std::vector<LaurentPoly>& polys, const Rational& q,
                                     const Rational& rho, const Rational& eps, int min_x = 0,
                                     int max_terms = 500);

/// Orthogonality of the type II polynomials n, m <= nmax.
struct OrthogonalityResult {
  std::vector<Check> checks;
  TailBound tail;
  /// S_nn / S_00 and the exact (d_0^2 tilde-d_0^2) / (d_n^2 tilde-d_n^2).
  std::vector<Rational> diagonal_ratios;
  std::vector<Rational> exact_ratios;
  /// Allowed deviation of each diagonal ratio.
  std::vector<double> ratio_bounds;
};
OrthogonalityResult orthogonality_check(const IndexSet& d, const Params& p, int nmax,
                                        const Rational& eps, int min_x = 0);
/// Same checks for the raw type I polynomials; the absolute check uses
/// prod_j (E_0 - tilde-E_{d_j}) / d_0^2.
OrthogonalityResult typeI_orthogonality_check(const IndexSet& d, const Params& p, int nmax,
                                              const Rational& eps, int min_x = 0);

struct ZerosReport {
  int physical = 0;
  int unphysical = 0;
  bool interlaced_with_next = false;
  std::vector<Root> roots;
};
ZerosReport zeros_report(const IndexSet& d, int n, const Params& p, int prec_bits);

/// Exact sign scans of Xi_D on [-1, xmax] and B_D, D_D on [0, xmax].
/// Outside the strict range failures are downgraded to warnings.
std::vector<Check> positivity_scan(const IndexSet& d, const Params& p, int xmax);

struct SuiteOptions {
  int nmax = 4;
  Rational eps = Rational::parse_decimal("1e-24");
  int xmax = 60;
  int prec_bits = 256;
  std::uint64_t seed = 0;
  /// "all" or a comma list of: identities, normalization, structural,
  /// orthogonality, zeros, positivity, reflection.
  std::string suite = "all";
};

/// Runs the selected checks in a fixed order. Range violations are reported
/// as a failed "precondition" check; other library errors become failed
/// checks carrying the error message.
VerificationReport run_suite(const IndexSet& d, const Params& p, const SuiteOptions& options);

/// A random parameter point inside the range for (family, ctype, dmax).
Params random_valid_point(std::mt19937_64& rng, Family family, CType ctype, int dmax);

/// Type I of D = {2} with x -> -x, q -> 1/q against type II of D = {2}.
bool reflection_holds(int n, const Params& p);

/// Largest coefficient deviation between the little q-Jacobi polynomial at
/// b = 2^-k and the little q-Laguerre polynomial with the same q, a.
double b_limit_deviation(const IndexSet& d, int n, const Params& laguerre, int k);

}  // namespace mipoly
