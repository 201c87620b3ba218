#include "mipoly/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mipoly/base_model.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/virtual_states.hpp"

namespace mipoly {

namespace {

constexpr int kRatioWindow = 8;
constexpr double kAbsoluteTolerance = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string tag(const std::string& base, const std::string& key, int value) {
  return base + "[" + key + "=" + std::to_string(value) + "]";
}

Check exact_check(const std::string& name, std::size_t residual_terms) {
  return Check{name, residual_terms == 0 ? Status::Pass : Status::Fail,
               "residual terms = " + std::to_string(residual_terms), std::nullopt};
}

Check exact_check(const std::string& name, const LaurentPoly& residual) {
  return exact_check(name, residual.term_count());
}

Check exact_check(const std::string& name, const EtaPoly& residual) {
  std::size_t terms = 0;
  for (const auto& c : residual.coeffs()) terms += c.is_zero() ? 0 : 1;
  return exact_check(name, terms);
}

Check flag_check(const std::string& name, bool ok, std::string witness) {
  return Check{name, ok ? Status::Pass : Status::Fail, std::move(witness), std::nullopt};
}

bool selected(const std::string& suite, const std::string& section) {
  if (suite == "all") return true;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == section) return true;
  }
  return false;
}

// Runs one section and turns a library error into a failed check.
template <typename Body>
void run_section(VerificationReport& report, const std::string& section, Body&& body) {
  try {
    report.append(body());
  } catch (const Error& e) {
    report.checks.push_back(Check{section + ".error", Status::Fail, e.what(), std::nullopt});
  }
}

Params with_type(Params p, CType t) {
  p.ctype = t;
  return p;
}

// Shared tail of the two orthogonality checks.
OrthogonalityResult assess_sums(const OrthogonalitySums& s, const std::vector<Rational>& exact,
                                double absolute_expected) {
  OrthogonalityResult out;
  out.tail = s.tail;
  const std::size_t count = s.sums.size();
  const Rational& tail = s.tail.tail_estimate;
  const double tail_d = tail.to_double();
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t m = n + 1; m < count; ++m) {
      const Rational& value = s.sums[n][m];
      out.checks.push_back(Check{
          "orthogonality.offdiag[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]",
          value.abs() <= tail ? Status::Pass : Status::Fail,
          "|S| = " + fmt(value.abs().to_double()) + ", tail = " + fmt(tail_d), tail_d});
    }
  }
  const Rational& s00 = s.sums[0][0];
  for (std::size_t n = 0; n < count; ++n) {
    const Rational ratio = s.sums[n][n] / s00;
    const Rational smallest = std::min(s00, s.sums[n][n]);
    const Rational allowed = Rational(2) * tail * exact[n] / smallest;
    out.diagonal_ratios.push_back(ratio);
    out.exact_ratios.push_back(exact[n]);
    out.ratio_bounds.push_back(allowed.to_double());
    out.checks.push_back(Check{tag("orthogonality.diagonal", "n", static_cast<int>(n)),
                               (ratio - exact[n]).abs() <= allowed ? Status::Pass : Status::Fail,
                               "deviation = " + fmt((ratio - exact[n]).abs().to_double()),
                               allowed.to_double()});
  }
  const double rel = std::fabs(s00.to_double() / absolute_expected - 1.0);
  out.checks.push_back(Check{"orthogonality.absolute",
                             rel <= kAbsoluteTolerance ? Status::Pass : Status::Fail,
                             "relative deviation = " + fmt(rel), kAbsoluteTolerance});
  out.checks.push_back(Check{"orthogonality.tail", Status::Pass,
                             "truncation_x = " + std::to_string(s.tail.truncation_x) +
                                 ", tail = " + fmt(tail_d),
                             tail_d});
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Warn:
      return "warn";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail; });
}

void VerificationReport::append(std::vector<Check> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// Orthogonality

OrthogonalitySums orthogonality_sums(const std::function<Rational(int)>& weight,
                                     const std::vector<LaurentPoly>& polys, const Rational& q,
                                     const Rational& rho, const Rational& eps, int min_x,
                                     int max_terms) {
  if (polys.empty()) throw Error("orthogonality_sums needs at least one polynomial");
  if (!(rho.sign() > 0 && rho < Rational(1))) throw Error("ratio bound must lie in (0, 1)");
  const std::size_t count = polys.size();
  OrthogonalitySums out;
  out.sums.assign(count, std::vector<Rational>(count));
  Rational previous;
  int streak = 0;
  std::vector<Rational> values(count);
  for (int x = 0; x < max_terms; ++x) {
    const Rational w = weight(x);
    Rational largest;
    for (std::size_t n = 0; n < count; ++n) {
      values[n] = eval_int_x(polys[n], x, q);
      largest = std::max(largest, values[n] * values[n]);
    }
    for (std::size_t n = 0; n < count; ++n) {
      for (std::size_t m = n; m < count; ++m) out.sums[n][m] += w * values[n] * values[m];
    }
    const Rational envelope = w.abs() * largest;
    streak = (x > 0 && envelope <= rho * previous) ? streak + 1 : 0;
    previous = envelope;
    if (x < min_x || streak < kRatioWindow) continue;
    const Rational tail = envelope * rho / (Rational(1) - rho);
    if (tail <= eps * out.sums[0][0]) {
      for (std::size_t n = 0; n < count; ++n) {
        for (std::size_t m = 0; m < n; ++m) out.sums[n][m] = out.sums[m][n];
      }
      out.tail = TailBound{x, out.sums[0][0], rho, tail};
      return out;
    }
  }
  throw NonConvergence("orthogonality sums not certified within " + std::to_string(max_terms) +
                       " terms");
}

OrthogonalityResult orthogonality_check(const IndexSet& d, const Params& p, int nmax,
                                        const Rational& eps, int min_x) {
  if (p.ctype != CType::TypeII) throw InvalidParams("orthogonality_check expects type II");
  require_valid(p, d.max_index());
  if (!(eps.sign() > 0)) throw InvalidParams("eps must be positive");
  const LaurentPoly xi = detail::denominator_y(d, p);
  const Params shifted = p.plus_tilde_delta(d.size());
  std::vector<LaurentPoly> polys;
  for (int n = 0; n <= nmax; ++n) polys.push_back(detail::multi_indexed_y(d, n, p));
  // phi_0^2 is built incrementally through its ratio recurrence.
  Rational phi_sq(1);
  int phi_x = 0;
  auto weight = [&](int x) {
    for (; phi_x < x; ++phi_x) {
      phi_sq *= groundstate_sq(phi_x + 1, shifted) / groundstate_sq(phi_x, shifted);
    }
    const Rational den = eval_int_x(xi, x, p.q) * eval_int_x(xi, x - 1, p.q);
    if (den.is_zero()) {
      throw DenominatorZeroAtInteger("denominator polynomial vanishes near x = " +
                                     std::to_string(x));
    }
    return phi_sq / den;
  };
  const Rational rho = (Rational(1) + p.a) / Rational(2);
  const OrthogonalitySums sums = orthogonality_sums(weight, polys, p.q, rho, eps, min_x);
  std::vector<Rational> exact;
  const Rational base = dtilde_sq(d, 0, p);
  for (int n = 0; n <= nmax; ++n) exact.push_back(base / (norm_dn_sq_ratio(n, p) * dtilde_sq(d, n, p)));
  const double expected = 1.0 / (norm_dn_sq_approx(0, p) * dtilde_sq(d, 0, p).to_double());
  return assess_sums(sums, exact, expected);
}

OrthogonalityResult typeI_orthogonality_check(const IndexSet& d, const Params& p, int nmax,
                                              const Rational& eps, int min_x) {
  const TypeISystem sys = typeI_deformed(d, p);
  if (!(eps.sign() > 0)) throw InvalidParams("eps must be positive");
  const VirtualData vd = detail::virtual_data(p);
  std::vector<LaurentPoly> polys;
  for (int n = 0; n <= nmax; ++n) polys.push_back(detail::typeI_raw_poly(d, n, p));
  Rational phi_sq(1);
  int phi_x = 0;
  auto weight = [&](int x) {
    for (; phi_x < x; ++phi_x) phi_sq *= groundstate_sq(phi_x + 1, p) / groundstate_sq(phi_x, p);
    Rational num = phi_sq;
    for (int j = 1; j <= d.size(); ++j) num *= eval_int_x(vd.bprime_new, x + j - 1, p.q);
    const Rational den = eval_int_x(sys.xi_cas, x, p.q) * eval_int_x(sys.xi_cas, x + 1, p.q);
    if (den.is_zero()) {
      throw DenominatorZeroAtInteger("type I Casoratian vanishes near x = " + std::to_string(x));
    }
    return num / den;
  };
  const Rational rho = (Rational(1) + p.a) / Rational(2);
  const OrthogonalitySums sums = orthogonality_sums(weight, polys, p.q, rho, eps, min_x);
  std::vector<Rational> exact;
  const Rational base = typeI_norm_ratio(d, 0, p);
  for (int n = 0; n <= nmax; ++n) exact.push_back(typeI_norm_ratio(d, n, p) / base);
  const double expected = base.to_double() / norm_dn_sq_approx(0, p);
  return assess_sums(sums, exact, expected);
}

// ---------------------------------------------------------------------------
// Zeros and positivity

ZerosReport zeros_report(const IndexSet& d, int n, const Params& p, int prec_bits) {
  if (prec_bits < 128) throw InvalidParams("prec_bits must be at least 128");
  const EtaPoly current = multi_indexed_poly(d, n, p);
  const EtaPoly next = multi_indexed_poly(d, n + 1, p);
  ZerosReport out;
  out.roots = eta_roots(current, prec_bits);
  for (const auto& r : out.roots) (r.physical ? out.physical : out.unphysical) += 1;
  out.interlaced_with_next =
      physical_zeros_interlace(out.roots, eta_roots(next, prec_bits), prec_bits);
  return out;
}

std::vector<Check> positivity_scan(const IndexSet& d, const Params& p, int xmax) {
  if (xmax < 10) throw InvalidParams("xmax must be at least 10");
  require_valid(p, d.max_index());
  std::vector<Check> out;
  const Status failure = in_strict_range(p) ? Status::Fail : Status::Warn;
  auto scan = [&](const std::string& name, int from, auto&& positive) {
    for (int x = from; x <= xmax; ++x) {
      bool ok = false;
      try {
        ok = positive(x);
      } catch (const DenominatorZeroAtInteger& e) {
        out.push_back(Check{name, failure, e.what(), std::nullopt});
        return;
      }
      if (!ok) {
        out.push_back(Check{name, failure, "first failure at x = " + std::to_string(x),
                            std::nullopt});
        return;
      }
    }
    out.push_back(Check{name, Status::Pass,
                        "x in [" + std::to_string(from) + ", " + std::to_string(xmax) + "]",
                        std::nullopt});
  };
  DeformedPotentials pot;
  if (p.ctype == CType::TypeII) {
    const LaurentPoly xi = detail::denominator_y(d, p);
    scan("positivity.xi", -1, [&](int x) { return eval_int_x(xi, x, p.q).sign() > 0; });
    pot = deformed_potentials(d, p);
  } else {
    const TypeISystem sys = typeI_deformed(d, p);
    const int sign = eval_int_x(sys.xi_cas, 0, p.q).sign();
    scan("positivity.casoratian", 0, [&](int x) {
      return sign != 0 && eval_int_x(sys.xi_cas, x, p.q).sign() == sign;
    });
    pot = sys.potentials;
  }
  scan("positivity.B", 0, [&](int x) { return pot.b.eval(x, p.q).sign() > 0; });
  scan("positivity.D", 1, [&](int x) { return pot.d.eval(x, p.q).sign() > 0; });
  try {
    const Rational d0 = pot.d.eval(0, p.q);
    out.push_back(Check{"positivity.D0", d0.is_zero() ? Status::Pass : failure,
                        "D_D(0) = " + d0.to_string(), std::nullopt});
  } catch (const DenominatorZeroAtInteger& e) {
    out.push_back(Check{"positivity.D0", failure, e.what(), std::nullopt});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural helpers

Params random_valid_point(std::mt19937_64& rng, Family family, CType ctype, int dmax) {
  auto fraction = [&rng](int lo_den, int hi_den) {
    std::uniform_int_distribution<int> dens(lo_den, hi_den);
    const int den = dens(rng);
    std::uniform_int_distribution<int> nums(1, den - 1);
    return Rational(nums(rng), den);
  };
  const Rational q = fraction(2, 9);
  const Rational bound = q.pow(1 + std::max(dmax, 0));
  const bool jacobi = family == Family::LittleQJacobi;
  Params p;
  if (ctype == CType::TypeII) {
    const Rational a = fraction(2, 11);
    p = jacobi ? Params::jacobi(q, a, bound * fraction(2, 11), ctype, dmax)
               : Params::laguerre(q, a, ctype, dmax);
  } else {
    const Rational a = bound * fraction(2, 11);
    p = jacobi ? Params::jacobi(q, a, fraction(2, 11), ctype, dmax)
               : Params::laguerre(q, a, ctype, dmax);
  }
  require_valid(p);
  return p;
}

bool reflection_holds(int n, const Params& p) {
  Params reflected = with_type(p, CType::TypeI);
  reflected.q = p.q.inverse();
  return detail::typeI_single(2, n, reflected) ==
         detail::multi_indexed_y(IndexSet({2}), n, with_type(p, CType::TypeII));
}

double b_limit_deviation(const IndexSet& d, int n, const Params& laguerre, int k) {
  const Params jacobi =
      Params::jacobi(laguerre.q, laguerre.a, Rational(2).pow(-k), CType::TypeII, laguerre.dmax);
  const EtaPoly lhs = to_eta(detail::multi_indexed_y(d, n, jacobi));
  const EtaPoly rhs = to_eta(detail::multi_indexed_y(d, n, with_type(laguerre, CType::TypeII)));
  double deviation = 0.0;
  for (int i = 0; i <= std::max(lhs.degree(), rhs.degree()); ++i) {
    deviation = std::max(deviation, (lhs.coeff(i) - rhs.coeff(i)).abs().to_double());
  }
  return deviation;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

std::vector<Check> identity_checks(const IndexSet& d, const Params& p, int nmax) {
  std::vector<Check> out;
  for (int n = 0; n <= nmax; ++n) {
    const LaurentPoly pn = eigenpoly_y(n, p);
    out.push_back(exact_check(tag("base.eigen", "n", n), ht_apply(pn, p) - pn * energy(n, p)));
    const LaurentPoly lower = eigenpoly_y(n - 1, p.plus_delta());
    out.push_back(exact_check(tag("base.forward", "n", n),
                              forward_shift_apply(pn, p) - lower * energy(n, p)));
    if (n >= 1) {
      out.push_back(
          exact_check(tag("base.backward", "n", n), backward_shift_apply(lower, p) - pn));
    }
  }
  for (int v : d.indices()) out.push_back(exact_check(tag("xi.diffeq", "v", v), xi_diffeq_residual(v, p)));
  if (p.ctype == CType::TypeI) {
    for (int n = 0; n <= nmax; ++n) {
      out.push_back(exact_check(tag("typeI.eigen", "n", n), typeI_eigencheck(d, n, p)));
    }
    if (d.size() == 1) {
      // The raw determinant is a constant multiple of the closed form.
      for (int n = 0; n <= nmax; ++n) {
        const LaurentPoly raw = detail::typeI_raw_poly(d, n, p);
        const LaurentPoly closed = detail::typeI_single(d.indices()[0], n, p);
        const Rational scale = eval_int_x(closed, 0, p.q) / eval_int_x(raw, 0, p.q);
        out.push_back(exact_check(tag("typeI.single_closed_form", "n", n), raw * scale - closed));
      }
    }
    return out;
  }
  for (int n = 0; n <= nmax; ++n) {
    out.push_back(exact_check(tag("deformed.eigen", "n", n), deformed_eigencheck(d, n, p)));
    out.push_back(exact_check(tag("deformed.forward", "n", n), deformed_forward_check(d, n, p)));
    if (n >= 1) {
      out.push_back(
          exact_check(tag("deformed.backward", "n", n), deformed_backward_check(d, n, p)));
    }
  }
  out.push_back(exact_check("deformed.lowest_is_denominator", lowest_matches_denominator(d, p)));
  const DeformedPotentials closed = deformed_potentials(d, p);
  const DeformedPotentials raw = deformed_potentials_casoratian(d, p);
  out.push_back(flag_check("deformed.potentials_two_routes",
                           same_function(closed.b, raw.b) && same_function(closed.d, raw.d),
                           "cross-multiplied numerators"));
  int bad = -1;
  for (int x = 0; x <= 20 && bad < 0; ++x) {
    if (!(psi_d_sq(x, d, p) == psi_d_sq_product(x, d, p))) bad = x;
  }
  out.push_back(flag_check("deformed.psi_two_routes", bad < 0,
                           bad < 0 ? "x in [0, 20]" : "mismatch at x = " + std::to_string(bad)));
  if (d.size() == 1) {
    for (int n = 0; n <= nmax; ++n) {
      out.push_back(exact_check(tag("deformed.single_closed_form", "n", n),
                                detail::multi_indexed_y(d, n, p) -
                                    typeII_single(d.indices()[0], n, p)));
    }
  }
  return out;
}

std::vector<Check> normalization_checks(const IndexSet& d, const Params& p, int nmax) {
  std::vector<Check> out;
  const LaurentPoly xi = detail::denominator_y(d, p);
  const EtaPoly xi_eta = to_eta(xi);
  const Rational xi_at = eval_int_x(xi, -1, p.q);
  out.push_back(flag_check("normalization.xi_at_minus_one", xi_at == Rational(1),
                           "Xi(-1) = " + xi_at.to_string()));
  out.push_back(flag_check("normalization.xi_degree", xi_eta.degree() == d.ell(),
                           "degree = " + std::to_string(xi_eta.degree())));
  out.push_back(flag_check("normalization.xi_leading",
                           xi_eta.leading() == denominator_leading(d, p),
                           "leading = " + xi_eta.leading().to_string()));
  for (int n = 0; n <= nmax; ++n) {
    const LaurentPoly pn = detail::multi_indexed_y(d, n, p);
    const EtaPoly pn_eta = to_eta(pn);
    const InfinityValues inf = infinity_values(d, n, p);
    const Rational at0 = eval_int_x(pn, 0, p.q);
    out.push_back(flag_check(tag("normalization.p_at_zero", "n", n), at0 == Rational(1),
                             "P(0) = " + at0.to_string()));
    out.push_back(flag_check(tag("normalization.p_degree", "n", n),
                             pn_eta.degree() == d.ell() + n,
                             "degree = " + std::to_string(pn_eta.degree())));
    out.push_back(flag_check(tag("normalization.p_leading", "n", n),
                             pn_eta.leading() == multi_indexed_leading(d, n, p),
                             "leading = " + pn_eta.leading().to_string()));
    out.push_back(flag_check(tag("normalization.infinity", "n", n),
                             eval_infinity(pn) == inf.p_inf && eval_infinity(xi) == inf.xi_inf,
                             "P(inf) = " + eval_infinity(pn).to_string()));
  }
  return out;
}

std::vector<Check> structural_checks(const IndexSet& d, const Params& p, int nmax) {
  std::vector<Check> out;
  if (p.ctype == CType::TypeII) {
    if (d.size() >= 2) {
      std::vector<int> reversed(d.indices().rbegin(), d.indices().rend());
      const IndexSet permuted = IndexSet::raw(reversed);
      const DeformedPotentials lhs = deformed_potentials(d, p);
      const DeformedPotentials rhs = deformed_potentials(permuted, p);
      const LaurentPoly xi = detail::denominator_y(d, p);
      const LaurentPoly xi_perm = detail::denominator_y(permuted, p);
      out.push_back(flag_check(
          "structural.permutation",
          same_function(lhs.b, rhs.b) && same_function(lhs.d, rhs.d) &&
              (xi == xi_perm || xi == -xi_perm),
          "order " + permuted.to_string()));
    }
    // D u {0} read one step earlier in parameter space reduces to D.
    std::vector<int> raised;
    for (int v : d.indices()) raised.push_back(v + 1);
    raised.push_back(0);
    const IndexSet with_zero = IndexSet::raw(raised);
    const Params earlier = p.plus_tilde_delta(-1);
    bool reduces = detail::denominator_y(with_zero, earlier) == detail::denominator_y(d, p);
    for (int n = 0; n <= nmax && reduces; ++n) {
      reduces = detail::multi_indexed_y(with_zero, n, earlier) == detail::multi_indexed_y(d, n, p);
    }
    out.push_back(flag_check("structural.reduction", reduces, "raw set " + with_zero.to_string()));

    const Params laguerre = Params::laguerre(p.q, p.a, CType::TypeII, p.dmax);
    const double lo = std::pow(2.0, -4.5);
    const double hi = std::pow(2.0, -3.5);
    for (int n = 0; n <= nmax; ++n) {
      const double d10 = b_limit_deviation(d, n, laguerre, 10);
      const double d14 = b_limit_deviation(d, n, laguerre, 14);
      const double d18 = b_limit_deviation(d, n, laguerre, 18);
      bool ok = false;
      std::string witness;
      if (d10 == 0.0 && d14 == 0.0 && d18 == 0.0) {
        ok = true;
        witness = "identical";
      } else if (d10 > 0.0 && d14 > 0.0) {
        const double r1 = d14 / d10;
        const double r2 = d18 / d14;
        ok = r1 >= lo && r1 <= hi && r2 >= lo && r2 <= hi;
        witness = "ratios " + fmt(r1) + ", " + fmt(r2);
      } else {
        witness = "degenerate deviations";
      }
      out.push_back(flag_check(tag("structural.b_limit", "n", n), ok, witness));
    }
  }
  const Params type_one = with_type(p, CType::TypeI).plus_tilde_delta(-1);
  const Params type_two = with_type(p, CType::TypeII).plus_tilde_delta(-1);
  for (int n = 0; n <= nmax; ++n) {
    out.push_back(flag_check(
        tag("structural.typeI_typeII_one", "n", n),
        detail::typeI_single(1, n, type_one) ==
            detail::multi_indexed_y(IndexSet({1}), n, type_two),
        "points (" + type_one.a.to_string() + ", " + type_one.b.to_string() + ") and (" +
            type_two.a.to_string() + ", " + type_two.b.to_string() + ")"));
  }
  return out;
}

std::vector<Check> reflection_checks(const Params& p, std::uint64_t seed) {
  constexpr int kPoints = 3;
  std::mt19937_64 rng(seed);
  std::vector<Params> points;
  for (int i = 0; i < kPoints; ++i) points.push_back(random_valid_point(rng, p.family, CType::TypeII, 2));
  std::vector<Check> out;
  for (int n = 0; n <= 2; ++n) {
    int holds = 0;
    for (const auto& pt : points) holds += reflection_holds(n, pt) ? 1 : 0;
    const bool expected = n <= 1;
    const bool ok = expected ? holds == kPoints : holds == 0;
    out.push_back(flag_check(tag("reflection", "n", n), ok,
                             "holds at " + std::to_string(holds) + "/" + std::to_string(kPoints) +
                                 (expected ? " points, expected all" : " points, expected none")));
  }
  return out;
}

std::vector<Check> zeros_checks(const IndexSet& d, const Params& p, int nmax, int prec_bits) {
  std::vector<Check> out;
  for (int n = 0; n <= nmax; ++n) {
    const ZerosReport z = zeros_report(d, n, p, prec_bits);
    out.push_back(flag_check(tag("zeros.count", "n", n),
                             z.physical == n && z.unphysical == d.ell(),
                             "physical = " + std::to_string(z.physical) +
                                 ", unphysical = " + std::to_string(z.unphysical)));
    out.push_back(flag_check(tag("zeros.interlace", "n", n), z.interlaced_with_next,
                             "against n = " + std::to_string(n + 1)));
  }
  return out;
}

}  // namespace

VerificationReport run_suite(const IndexSet& d, const Params& p, const SuiteOptions& options) {
  VerificationReport report;
  report.params_echo = p;
  report.dset_echo = d;
  if (auto why = range_violation(p, d.max_index())) {
    report.checks.push_back(Check{"precondition", Status::Fail, *why, std::nullopt});
    return report;
  }
  report.checks.push_back(Check{"precondition", Status::Pass, "parameters in range", std::nullopt});
  const bool type_two = p.ctype == CType::TypeII;
  const int nmax = options.nmax;
  if (selected(options.suite, "identities")) {
    run_section(report, "identities", [&] { return identity_checks(d, p, nmax); });
  }
  if (type_two && selected(options.suite, "normalization")) {
    run_section(report, "normalization", [&] { return normalization_checks(d, p, nmax); });
  }
  if (selected(options.suite, "structural")) {
    run_section(report, "structural", [&] { return structural_checks(d, p, nmax); });
  }
  if (selected(options.suite, "orthogonality")) {
    run_section(report, "orthogonality", [&] {
      return type_two ? orthogonality_check(d, p, nmax, options.eps).checks
                      : typeI_orthogonality_check(d, p, nmax, options.eps).checks;
    });
  }
  if (type_two && selected(options.suite, "zeros")) {
    run_section(report, "zeros", [&] { return zeros_checks(d, p, nmax, options.prec_bits); });
  }
  if (selected(options.suite, "positivity")) {
    run_section(report, "positivity", [&] { return positivity_scan(d, p, options.xmax); });
  }
  if (selected(options.suite, "reflection")) {
    run_section(report, "reflection", [&] { return reflection_checks(p, options.seed); });
  }
  return report;
}

}  // namespace mipoly
