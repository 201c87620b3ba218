#include <gtest/gtest.h>

#include <random>

#include "mipoly/base_model.hpp"
#include "mipoly/darboux.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/verifier.hpp"
#include "oracles.hpp"

using namespace mipoly;

namespace {

Params jacobi_default() { return Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(1, 16)); }
Params jacobi_small_b() { return Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(1, 128)); }
Params laguerre_default() { return Params::laguerre(Rational(1, 2), Rational(1, 3)); }

}  // namespace

TEST(IndexSet, StrictRules) {
  EXPECT_THROW(IndexSet({0}), InvalidParams);
  EXPECT_THROW(IndexSet({2, 2}), InvalidParams);
  EXPECT_THROW(IndexSet({3, 1}), InvalidParams);
  EXPECT_NO_THROW(IndexSet::raw({3, 1, 0}));
  EXPECT_EQ(IndexSet::parse("1,3,5"), IndexSet({1, 3, 5}));
  EXPECT_TRUE(IndexSet::parse("").empty());
  EXPECT_EQ(IndexSet({1, 3, 5}).ell(), 6);
  EXPECT_EQ(IndexSet({2, 4}).max_index(), 4);
}

TEST(Casoratian, SmallCases) {
  const Rational q(1, 2);
  EXPECT_EQ(casoratian_minus({}, q), LaurentPoly(1));
  EXPECT_EQ(casoratian_plus({}, q), LaurentPoly(1));
  const LaurentPoly f = LaurentPoly(3) - LaurentPoly::monomial(2, 1);
  EXPECT_EQ(casoratian_minus({f}, q), f);
}

TEST(Casoratian, MinusIsSignedShiftOfPlus) {
  const Rational q(1, 3);
  std::vector<LaurentPoly> fs;
  for (int k = 0; k < 4; ++k) {
    fs.push_back(LaurentPoly(k + 1) + LaurentPoly::monomial(Rational(1, k + 2), k + 1) -
                 LaurentPoly::monomial(Rational(k), 2));
    const int n = static_cast<int>(fs.size());
    const int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(casoratian_minus(fs, q), shift_x(casoratian_plus(fs, q), -n + 1, q) * Rational(sign))
        << "n = " << n;
  }
}

TEST(Construction, EmptySetGivesBaseSystem) {
  const Params p = jacobi_default();
  EXPECT_EQ(denominator_poly(IndexSet(), p), EtaPoly({Rational(1)}));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(multi_indexed_poly(IndexSet(), n, p), eigenpoly(n, p));
  EXPECT_TRUE(deformed_eigencheck(IndexSet(), 3, p).is_zero());
}

TEST(Construction, GoldenFormsAtDefaultPoint) {
  const Params p = jacobi_default();
  const IndexSet d({2});
  EXPECT_EQ(from_eta(multi_indexed_poly(d, 0, p)), oracles::golden_p0(p));
  EXPECT_EQ(from_eta(multi_indexed_poly(d, 1, p)), oracles::golden_p1(p));
  EXPECT_EQ(multi_indexed_poly(d, 0, p).coeffs().size(), 3u);
}

TEST(Construction, GoldenFormsAtRandomPoints) {
  std::mt19937_64 rng(11);
  const IndexSet d({2});
  for (int i = 0; i < 5; ++i) {
    const Params p = random_valid_point(rng, Family::LittleQJacobi, CType::TypeII, 2);
    EXPECT_EQ(detail::multi_indexed_y(d, 0, p), oracles::golden_p0(p));
    EXPECT_EQ(detail::multi_indexed_y(d, 1, p), oracles::golden_p1(p));
  }
}

TEST(Construction, NormalisationAndDegree) {
  for (const Params& p : {jacobi_small_b(), laguerre_default()}) {
    for (const IndexSet& d : {IndexSet({1}), IndexSet({1, 2}), IndexSet({2, 4})}) {
      const EtaPoly xi = denominator_poly(d, p);
      EXPECT_EQ(eval_int_x(from_eta(xi), -1, p.q), Rational(1));
      EXPECT_EQ(xi.degree(), d.ell());
      EXPECT_EQ(xi.leading(), denominator_leading(d, p));
      for (int n = 0; n <= 3; ++n) {
        const EtaPoly pn = multi_indexed_poly(d, n, p);
        EXPECT_EQ(pn.coeff(0), Rational(1));
        EXPECT_EQ(pn.degree(), d.ell() + n);
        EXPECT_EQ(pn.leading(), multi_indexed_leading(d, n, p));
        EXPECT_EQ(eval_infinity(from_eta(pn)), infinity_values(d, n, p).p_inf);
      }
    }
  }
}

TEST(Construction, InfinityValuesTwoRoutes) {
  const Params p = laguerre_default();
  const IndexSet d({1, 2});
  const InfinityValues inf = infinity_values(d, 2, p);
  EXPECT_EQ(eval_infinity(detail::multi_indexed_y(d, 2, p)), inf.p_inf);
  EXPECT_EQ(eval_infinity(detail::denominator_y(d, p)), inf.xi_inf);
}

TEST(Construction, RejectsOutOfRange) {
  const Params p = Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(1, 4));
  EXPECT_THROW(multi_indexed_poly(IndexSet({2}), 0, p), InvalidParams);
  EXPECT_THROW(multi_indexed_poly(IndexSet({2}), 0, Params::laguerre(Rational(1, 2), Rational(1, 3),
                                                                      CType::TypeI)),
               InvalidParams);
}

TEST(Deformed, LowestDegreeRelation) {
  EXPECT_TRUE(lowest_matches_denominator(IndexSet({2}), jacobi_default()).is_zero());
  EXPECT_TRUE(lowest_matches_denominator(IndexSet({1, 3}), laguerre_default()).is_zero());
}

TEST(Deformed, EigenAndShiftResiduals) {
  const IndexSet two({2});
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(deformed_eigencheck(two, n, jacobi_default()).is_zero());
  const IndexSet one_three({1, 3});
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(deformed_eigencheck(one_three, n, laguerre_default()).is_zero());
    EXPECT_TRUE(deformed_forward_check(one_three, n, laguerre_default()).is_zero());
  }
  EXPECT_TRUE(deformed_forward_check(two, 0, jacobi_default()).is_zero());
  EXPECT_TRUE(deformed_backward_check(IndexSet({1}), 1, laguerre_default()).is_zero());
}

TEST(Deformed, ExtendedRangeNegativeB) {
  const Params p = Params::jacobi(Rational(1, 2), Rational(1, 3), Rational(-1, 4));
  const IndexSet d({2});
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(deformed_eigencheck(d, n, p).is_zero());
    EXPECT_TRUE(deformed_forward_check(d, n, p).is_zero());
  }
  EXPECT_TRUE(lowest_matches_denominator(d, p).is_zero());
}

TEST(Deformed, PotentialsTwoRoutesAndBoundary) {
  for (const IndexSet& d : {IndexSet({2}), IndexSet({1, 3, 5})}) {
    const Params p = jacobi_small_b();
    const DeformedPotentials closed = deformed_potentials(d, p);
    const DeformedPotentials raw = deformed_potentials_casoratian(d, p);
    EXPECT_TRUE(same_function(closed.b, raw.b));
    EXPECT_TRUE(same_function(closed.d, raw.d));
  }
  const Params p = jacobi_default();
  EXPECT_EQ(deformed_potentials(IndexSet({2}), p).d.eval(0, p.q), Rational(0));
}

TEST(Deformed, GroundStateTwoRoutes) {
  const Params p = jacobi_default();
  const IndexSet d({2});
  EXPECT_EQ(psi_d_sq(0, d, p), Rational(1));
  for (int x = 0; x <= 12; ++x) EXPECT_EQ(psi_d_sq(x, d, p), psi_d_sq_product(x, d, p)) << x;
}

TEST(Deformed, NormFactor) {
  EXPECT_EQ(dtilde_sq(IndexSet(), 3, jacobi_default()), Rational(1));
  EXPECT_EQ(dtilde_sq(IndexSet({2}), 0, jacobi_default()), Rational(21, 11));
  EXPECT_EQ(dtilde_sq(IndexSet({1}), 1, laguerre_default()), Rational(6, 11));
}

TEST(Deformed, SingleIndexClosedForm) {
  for (const Params& p : {jacobi_default(), laguerre_default()}) {
    for (int d = 1; d <= 2; ++d) {
      for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(detail::multi_indexed_y(IndexSet({d}), n, p), typeII_single(d, n, p));
      }
    }
  }
}

TEST(Structural, PermutationInvariance) {
  const Params p = jacobi_small_b();
  const IndexSet sorted({1, 3, 5});
  for (const IndexSet& other : {IndexSet::raw({5, 1, 3}), IndexSet::raw({3, 1, 5})}) {
    const DeformedPotentials lhs = deformed_potentials(sorted, p);
    const DeformedPotentials rhs = deformed_potentials(other, p);
    EXPECT_TRUE(same_function(lhs.b, rhs.b));
    EXPECT_TRUE(same_function(lhs.d, rhs.d));
    EXPECT_EQ(detail::denominator_y(sorted, p), detail::denominator_y(other, p));
  }
}

TEST(Structural, ZeroIndexReduction) {
  const Params p = jacobi_small_b();
  for (const auto& labels : std::vector<std::vector<int>>{{}, {1}, {1, 3}}) {
    std::vector<int> raised;
    for (int v : labels) raised.push_back(v + 1);
    raised.push_back(0);
    const IndexSet with_zero = IndexSet::raw(raised);
    const IndexSet d = IndexSet::raw(labels);
    const Params earlier = p.plus_tilde_delta(-1);
    EXPECT_EQ(detail::denominator_y(with_zero, earlier), detail::denominator_y(d, p));
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(detail::multi_indexed_y(with_zero, n, earlier), detail::multi_indexed_y(d, n, p));
    }
  }
}

TEST(TypeI, EigenAndPositivity) {
  const Params jac = Params::jacobi(Rational(1, 2), Rational(1, 40), Rational(1, 3), CType::TypeI);
  const Params lag = Params::laguerre(Rational(1, 2), Rational(1, 40), CType::TypeI);
  for (const Params& p : {jac, lag}) {
    for (const IndexSet& d : {IndexSet({1}), IndexSet({2}), IndexSet({1, 2})}) {
      for (int n = 0; n <= 3; ++n) EXPECT_TRUE(typeI_eigencheck(d, n, p).is_zero());
      const TypeISystem sys = typeI_deformed(d, p);
      EXPECT_EQ(sys.potentials.d.eval(0, p.q), Rational(0));
      for (int x = 0; x <= 20; ++x) EXPECT_GT(sys.potentials.b.eval(x, p.q), Rational(0));
      for (int x = 1; x <= 20; ++x) EXPECT_GT(sys.potentials.d.eval(x, p.q), Rational(0));
    }
  }
}

TEST(TypeI, RawDeterminantIsMultipleOfClosedForm) {
  const Params p = Params::jacobi(Rational(1, 2), Rational(1, 40), Rational(1, 3), CType::TypeI);
  for (int d = 1; d <= 2; ++d) {
    for (int n = 0; n <= 3; ++n) {
      const LaurentPoly raw = typeI_raw_poly(IndexSet({d}), n, p);
      const LaurentPoly closed = typeI_single(d, n, p);
      EXPECT_EQ(raw * (eval_int_x(closed, 0, p.q) / eval_int_x(raw, 0, p.q)), closed);
    }
  }
}

TEST(TypeI, SingleIndexOneMatchesTypeTwo) {
  for (const Params& base : {jacobi_default(), laguerre_default()}) {
    Params one = base;
    one.ctype = CType::TypeI;
    one = one.plus_tilde_delta(-1);
    const Params two = base.plus_tilde_delta(-1);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(detail::typeI_single(1, n, one), detail::multi_indexed_y(IndexSet({1}), n, two));
    }
  }
}

TEST(Errors, RationalFunctionPoleAtInteger) {
  RationalFunction f{LaurentPoly(1), LaurentPoly(1) - LaurentPoly::monomial(4, 1)};
  EXPECT_THROW(f.eval(2, Rational(1, 2)), DenominatorZeroAtInteger);
}
