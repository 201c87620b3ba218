#include "mipoly/darboux.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mipoly/base_model.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/qseries.hpp"

namespace mipoly {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

LaurentPoly sh(const LaurentPoly& f, int s, const Params& p) { return shift_x(f, s, p.q); }

void require_type(const Params& p, CType expected, const IndexSet& d) {
  if (p.ctype != expected) {
    throw InvalidParams("operation requires a type " +
                        std::string(expected == CType::TypeI ? "I" : "II") + " parameter point");
  }
  require_valid(p, d.max_index());
}

std::vector<LaurentPoly> seed_polys(const IndexSet& d, const Params& p) {
  std::vector<LaurentPoly> out;
  out.reserve(d.indices().size());
  for (int v : d.indices()) out.push_back(detail::xi_poly(v, p));
  return out;
}

// Shared by the type II constructions: the (M+1) x (M+1) determinant with
// seed columns at x - j + 1 and the weighted P_n column, before normalisation.
LaurentPoly type_two_numerator(const IndexSet& d, int n, const Params& p) {
  const int m = d.size();
  const std::vector<LaurentPoly> seeds = seed_polys(d, p);
  const LaurentPoly pn = eigenpoly_y(n, p);
  LaurentMatrix mat(m + 1, std::vector<LaurentPoly>(m + 1));
  for (int j = 1; j <= m + 1; ++j) {
    for (int k = 0; k < m; ++k) mat[j - 1][k] = sh(seeds[k], -(j - 1), p);
    mat[j - 1][m] = r_factor(j, m, p) * sh(pn, -(j - 1), p);
  }
  return det_laurent(mat);
}

LaurentPoly divide_normalised(const LaurentPoly& det, const LaurentPoly& varphi,
                              const Rational& constant) {
  if (det.is_zero()) throw DegenerateCasoratian("Casoratian vanishes identically");
  LaurentPoly out = divide_exact(det, varphi) * constant.inverse();
  if (out.has_negative_powers()) {
    throw InternalInvariantError("normalised Casoratian is not a polynomial in eta");
  }
  return out;
}

LaurentPoly typeI_matrix_det(const IndexSet& d, int n, const Params& p) {
  const int m = d.size();
  const std::vector<LaurentPoly> seeds = seed_polys(d, p);
  const LaurentPoly pn = eigenpoly_y(n, p);
  const Rational ratio = p.a / p.q;
  LaurentMatrix mat(m + 1, std::vector<LaurentPoly>(m + 1));
  for (int i = 0; i <= m; ++i) {
    for (int k = 0; k < m; ++k) mat[i][k] = sh(seeds[k], i, p);
    mat[i][m] = sh(pn, i, p) * ratio.pow(i);
  }
  return det_laurent(mat);
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) throw InvalidParams("virtual state labels must be >= 1");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw InvalidParams("virtual state labels must be strictly increasing");
    }
  }
}

IndexSet IndexSet::raw(std::vector<int> indices) {
  std::set<int> seen;
  for (int v : indices) {
    if (v < 0) throw InvalidParams("virtual state labels must be non-negative");
    if (!seen.insert(v).second) throw InvalidParams("virtual state labels must be distinct");
  }
  IndexSet out;
  out.indices_ = std::move(indices);
  out.raw_ = true;
  return out;
}

IndexSet IndexSet::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidParams("invalid index list: " + text);
    }
    if (used != item.size()) throw InvalidParams("invalid index list: " + text);
    out.push_back(v);
  }
  return IndexSet(std::move(out));
}

int IndexSet::max_index() const {
  return indices_.empty() ? 0 : *std::max_element(indices_.begin(), indices_.end());
}

int IndexSet::ell() const {
  int sum = 0;
  for (int v : indices_) sum += v;
  return sum - static_cast<int>(binom2(size()));
}

std::string IndexSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

bool same_function(const RationalFunction& lhs, const RationalFunction& rhs) {
  return lhs.num * rhs.den == rhs.num * lhs.den;
}

Rational RationalFunction::eval(int x, const Rational& q) const {
  const Rational den_value = eval_int_x(den, x, q);
  if (den_value.is_zero()) {
    throw DenominatorZeroAtInteger("denominator vanishes at x = " + std::to_string(x));
  }
  return eval_int_x(num, x, q) / den_value;
}

// ---------------------------------------------------------------------------
// Casoratians and normalisation

LaurentPoly casoratian_plus(const std::vector<LaurentPoly>& fs, const Rational& q) {
  const std::size_t n = fs.size();
  LaurentMatrix mat(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) mat[j][k] = shift_x(fs[k], static_cast<int>(j), q);
  }
  return det_laurent(mat);
}

LaurentPoly casoratian_minus(const std::vector<LaurentPoly>& fs, const Rational& q) {
  const std::size_t n = fs.size();
  LaurentMatrix mat(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) mat[j][k] = shift_x(fs[k], -static_cast<int>(j), q);
  }
  return det_laurent(mat);
}

namespace detail {

Rational cd_constant(const IndexSet& d, const Params& p) {
  const int m = d.size();
  const VirtualData vd = detail::virtual_data(p);
  Rational out = eval_int_x(varphi_minus(m, p.q), -1, p.q).inverse();
  const auto& idx = d.indices();
  for (int j = 1; j <= m; ++j) {
    const Rational dnew = eval_int_x(vd.dprime_new, -j, p.q);
    for (int k = j + 1; k <= m; ++k) {
      const Rational diff =
          detail::virtual_energy(idx[j - 1], p) - detail::virtual_energy(idx[k - 1], p);
      if (dnew.is_zero()) throw InvalidParams("C_D: vanishing D'new(-j)");
      out *= diff / dnew;
    }
  }
  return out;
}

Rational cdn_constant(const IndexSet& d, const Params& p) {
  const int m = d.size();
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * p.q.pow(binom2(m + 1)) * detail::cd_constant(d, p);
}

LaurentPoly denominator_y(const IndexSet& d, const Params& p) {
  const Rational cd = detail::cd_constant(d, p);
  if (cd.is_zero()) throw DegenerateCasoratian("C_D vanishes (repeated virtual energy)");
  return divide_normalised(casoratian_minus(seed_polys(d, p), p.q), varphi_minus(d.size(), p.q),
                           cd);
}

LaurentPoly multi_indexed_y(const IndexSet& d, int n, const Params& p) {
  if (n < 0) return LaurentPoly();
  const Rational cdn = detail::cdn_constant(d, p);
  if (cdn.is_zero()) throw DegenerateCasoratian("C_{D,n} vanishes (repeated virtual energy)");
  return divide_normalised(type_two_numerator(d, n, p), varphi_minus(d.size() + 1, p.q), cdn);
}

LaurentPoly typeI_raw_poly(const IndexSet& d, int n, const Params& p) {
  if (n < 0) return LaurentPoly();
  return typeI_matrix_det(d, n, p);
}

LaurentPoly typeI_single(int d, int n, const Params& p) {
  Params tp = p;
  tp.ctype = CType::TypeI;
  const Rational& q = p.q;
  const LaurentPoly xi = detail::xi_poly(d, tp);
  const LaurentPoly pn = eigenpoly_y(n, tp);
  const Rational den =
      (Rational(1) - p.a * q.pow(n - d - 1)) * (Rational(1) - p.b * q.pow(n + d));
  if (den.is_zero()) throw InvalidParams("type I single-indexed normalisation vanishes");
  const Rational pref = (Rational(1) - p.b) * q.pow(n) / den;
  return (sh(xi, 1, tp) * pn - sh(pn, 1, tp) * xi * (p.a / q)) * pref;
}

}  // namespace detail

Rational cd_constant(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  return detail::cd_constant(d, p);
}

Rational cdn_constant(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  return detail::cdn_constant(d, p);
}

DeformedSystem make_deformed(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  DeformedSystem sys;
  sys.params = p;
  sys.dset = d;
  for (int v : d.indices()) sys.xi_polys.push_back(VirtualPoly{v, detail::xi_poly(v, p), p.ctype});
  sys.xi_cas = casoratian_minus(seed_polys(d, p), p.q);
  sys.xi_denom = to_eta(detail::denominator_y(d, p));
  sys.cd = detail::cd_constant(d, p);
  sys.cdn = detail::cdn_constant(d, p);
  return sys;
}

EtaPoly denominator_poly(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  return to_eta(detail::denominator_y(d, p));
}

EtaPoly multi_indexed_poly(const IndexSet& d, int n, const Params& p) {
  require_type(p, CType::TypeII, d);
  return to_eta(detail::multi_indexed_y(d, n, p));
}

// ---------------------------------------------------------------------------
// Closed-form constants

Rational denominator_leading(const IndexSet& d, const Params& p) {
  const auto& idx = d.indices();
  const int m = d.size();
  Rational out(1);
  for (int j = 1; j <= m; ++j) out *= xi_leading(idx[j - 1], p) / xi_leading(j - 1, p);
  if (!p.is_jacobi()) return out * p.q.pow(-static_cast<long>(m - 1) * d.ell());
  const Rational bq = p.b / p.q;
  for (int j = 1; j <= m; ++j) {
    for (int k = j + 1; k <= m; ++k) {
      out *= (bq - p.a * p.q.pow(j + k - 2)) / (bq - p.a * p.q.pow(idx[j - 1] + idx[k - 1]));
    }
  }
  return out;
}

Rational multi_indexed_leading(const IndexSet& d, int n, const Params& p) {
  const int m = d.size();
  Rational out = denominator_leading(d, p) * eigenpoly_leading(n, p) * p.q.pow(-n * m);
  if (!p.is_jacobi()) return out;
  for (int j = 1; j <= m; ++j) {
    out *= (Rational(1) - p.b * p.q.pow(n - d.indices()[j - 1] - 1)) /
           (Rational(1) - p.b * p.q.pow(-j));
  }
  return out;
}

InfinityValues infinity_values(const IndexSet& d, int n, const Params& p) {
  const auto& idx = d.indices();
  const int m = d.size();
  Rational xi(1);
  Rational energies(1);
  for (int j = 1; j <= m; ++j) {
    xi *= xi_value_at_infinity(idx[j - 1], p) / xi_value_at_infinity(j - 1, p);
    energies *= (energy(n, p) - detail::virtual_energy(idx[j - 1], p)) /
                (-detail::virtual_energy(j - 1, p));
  }
  return InfinityValues{xi, xi * energies * eigenpoly_value_at_infinity(n, p)};
}

Rational dtilde_sq(const IndexSet& d, int n, const Params& p) {
  const int m = d.size();
  Rational denom(1);
  for (int v : d.indices()) denom *= energy(n, p) - detail::virtual_energy(v, p);
  const Rational num = p.is_jacobi() ? qpoch(p.b * p.q.pow(-m), p.q, m) : Rational(1);
  return num / denom;
}

EtaPoly lowest_matches_denominator(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  const LaurentPoly lowest = detail::multi_indexed_y(d, 0, p);
  const LaurentPoly shifted = sh(detail::denominator_y(d, p.plus_delta()), -1, p);
  return to_eta(lowest - shifted);
}

// ---------------------------------------------------------------------------
// Deformed potentials and residuals

DeformedPotentials deformed_potentials(const IndexSet& d, const Params& p) {
  if (p.ctype == CType::TypeI) return typeI_deformed(d, p).potentials;
  require_type(p, CType::TypeII, d);
  const LaurentPoly xi = detail::denominator_y(d, p);
  const LaurentPoly xi_next = detail::denominator_y(d, p.plus_delta());
  const LaurentPoly b_shifted = potential_B(p.plus_tilde_delta(d.size()));
  DeformedPotentials out;
  out.b.num = b_shifted * sh(xi, -1, p) * xi_next;
  out.b.den = xi * sh(xi_next, -1, p);
  out.d.num = potential_D(p) * xi * sh(xi_next, -2, p);
  out.d.den = sh(xi, -1, p) * sh(xi_next, -1, p);
  return out;
}

DeformedPotentials deformed_potentials_casoratian(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  const int m = d.size();
  const VirtualData vd = detail::virtual_data(p);
  const LaurentPoly w = casoratian_minus(seed_polys(d, p), p.q);
  const LaurentPoly r = type_two_numerator(d, 0, p);
  const Rational b_shift = p.b * p.q.pow(-m);
  const LaurentPoly y = LaurentPoly::y();
  DeformedPotentials out;
  out.b.num = vd.bprime_new * sh(w, -1, p) * (LaurentPoly(1) - y * b_shift) * sh(r, 1, p);
  out.b.den = w * (LaurentPoly(1) - y * p.q) * r;
  out.d.num = sh(vd.dprime_new, -m, p) * w * (LaurentPoly(1) - y) * sh(r, -1, p);
  out.d.den = sh(w, -1, p) * (LaurentPoly(1) - y * (b_shift / p.q)) * r;
  return out;
}

LaurentPoly deformed_eigencheck(const IndexSet& d, int n, const Params& p) {
  require_type(p, CType::TypeII, d);
  const LaurentPoly xi = detail::denominator_y(d, p);
  const LaurentPoly xn = detail::denominator_y(d, p.plus_delta());
  const LaurentPoly pn = detail::multi_indexed_y(d, n, p);
  const LaurentPoly bs = potential_B(p.plus_tilde_delta(d.size()));
  const LaurentPoly xi_m1 = sh(xi, -1, p);
  const LaurentPoly xn_m1 = sh(xn, -1, p);
  return bs * xi_m1 * xi_m1 * (xn * pn - xn_m1 * sh(pn, 1, p)) +
         potential_D(p) * xi * xi * (sh(xn, -2, p) * pn - xn_m1 * sh(pn, -1, p)) -
         xi * xi_m1 * xn_m1 * pn * energy(n, p);
}

LaurentPoly deformed_forward_check(const IndexSet& d, int n, const Params& p) {
  require_type(p, CType::TypeII, d);
  const Params shifted = p.plus_tilde_delta(d.size());
  const Rational b0 = eval_int_x(potential_B(shifted), 0, p.q);
  const LaurentPoly xi = detail::denominator_y(d, p);
  const LaurentPoly xn = detail::denominator_y(d, p.plus_delta());
  const LaurentPoly pn = detail::multi_indexed_y(d, n, p);
  const LaurentPoly lower = detail::multi_indexed_y(d, n - 1, p.plus_delta());
  return (xn * pn - sh(xn, -1, p) * sh(pn, 1, p)) * b0 -
         LaurentPoly::y() * xi * lower * energy(n, p);
}

LaurentPoly deformed_backward_check(const IndexSet& d, int n, const Params& p) {
  require_type(p, CType::TypeII, d);
  const Params shifted = p.plus_tilde_delta(d.size());
  const Rational b0 = eval_int_x(potential_B(shifted), 0, p.q);
  const LaurentPoly xi = detail::denominator_y(d, p);
  const LaurentPoly xn = detail::denominator_y(d, p.plus_delta());
  const LaurentPoly g = LaurentPoly::y() * detail::multi_indexed_y(d, n - 1, p.plus_delta());
  const LaurentPoly pn = detail::multi_indexed_y(d, n, p);
  return potential_B(shifted) * sh(xi, -1, p) * g - potential_D(p) * xi * sh(g, -1, p) -
         sh(xn, -1, p) * pn * b0;
}

Rational psi_d_sq(int x, const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeII, d);
  const LaurentPoly xi = detail::denominator_y(d, p);
  return eval_int_x(xi, 0, p.q) * orthogonality_weight(x, d, p);
}

Rational psi_d_sq_product(int x, const IndexSet& d, const Params& p) {
  const DeformedPotentials pot = deformed_potentials(d, p);
  Rational out(1);
  for (int s = 0; s < x; ++s) out *= pot.b.eval(s, p.q) / pot.d.eval(s + 1, p.q);
  // The product is the squared ground state psi_D^2 P_{D,0}^2.
  const Rational lowest = eval_int_x(detail::multi_indexed_y(d, 0, p), x, p.q);
  return out / (lowest * lowest);
}

Rational orthogonality_weight(int x, const IndexSet& d, const Params& p) {
  const LaurentPoly xi = detail::denominator_y(d, p);
  const Rational den = eval_int_x(xi, x, p.q) * eval_int_x(xi, x - 1, p.q);
  if (den.is_zero()) {
    throw DenominatorZeroAtInteger("denominator polynomial vanishes near x = " +
                                   std::to_string(x));
  }
  return groundstate_sq(x, p.plus_tilde_delta(d.size())) / den;
}

// ---------------------------------------------------------------------------
// Type I

TypeISystem typeI_deformed(const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeI, d);
  const int m = d.size();
  const VirtualData vd = detail::virtual_data(p);
  const LaurentPoly w = casoratian_plus(seed_polys(d, p), p.q);
  const LaurentPoly r0 = typeI_matrix_det(d, 0, p);
  if (w.is_zero() || r0.is_zero()) throw DegenerateCasoratian("type I Casoratian vanishes");
  const Rational ratio = p.a / p.q;
  TypeISystem sys;
  sys.params = p;
  sys.dset = d;
  sys.xi_cas = w;
  sys.potentials.b.num = sh(vd.bprime_new, m, p) * w * sh(r0, 1, p) * ratio;
  sys.potentials.b.den = sh(w, 1, p) * r0;
  sys.potentials.d.num = vd.dprime_new * sh(w, 1, p) * sh(r0, -1, p) * ratio.inverse();
  sys.potentials.d.den = w * r0;
  return sys;
}

LaurentPoly typeI_raw_poly(const IndexSet& d, int n, const Params& p) {
  require_type(p, CType::TypeI, d);
  return detail::typeI_raw_poly(d, n, p);
}

LaurentPoly typeI_eigencheck(const IndexSet& d, int n, const Params& p) {
  const TypeISystem sys = typeI_deformed(d, p);
  const LaurentPoly r0 = typeI_matrix_det(d, 0, p);
  const LaurentPoly rn = typeI_matrix_det(d, n, p);
  const RationalFunction& b = sys.potentials.b;
  const RationalFunction& dd = sys.potentials.d;
  const LaurentPoly r0_p = sh(r0, 1, p);
  const LaurentPoly r0_m = sh(r0, -1, p);
  return b.num * dd.den * r0_m * (rn * r0_p - sh(rn, 1, p) * r0) +
         dd.num * b.den * r0_p * (rn * r0_m - sh(rn, -1, p) * r0) -
         b.den * dd.den * rn * r0_p * r0_m * energy(n, p);
}

Rational typeI_weight(int x, const IndexSet& d, const Params& p) {
  require_type(p, CType::TypeI, d);
  const VirtualData vd = detail::virtual_data(p);
  const LaurentPoly w = casoratian_plus(seed_polys(d, p), p.q);
  const Rational den = eval_int_x(w, x, p.q) * eval_int_x(w, x + 1, p.q);
  if (den.is_zero()) {
    throw DenominatorZeroAtInteger("type I Casoratian vanishes near x = " + std::to_string(x));
  }
  Rational num = groundstate_sq(x, p);
  for (int j = 1; j <= d.size(); ++j) num *= eval_int_x(vd.bprime_new, x + j - 1, p.q);
  return num / den;
}

Rational typeI_norm_ratio(const IndexSet& d, int n, const Params& p) {
  Rational out = norm_dn_sq_ratio(n, p).inverse();
  for (int v : d.indices()) out *= energy(n, p) - detail::virtual_energy(v, p);
  return out;
}

LaurentPoly typeI_single(int d, int n, const Params& p) {
  require_type(p, CType::TypeI, IndexSet({d}));
  return detail::typeI_single(d, n, p);
}

LaurentPoly typeII_single(int d, int n, const Params& p) {
  Params tp = p;
  tp.ctype = CType::TypeII;
  require_valid(tp, d);
  const Rational bq = p.b / p.q;
  const LaurentPoly xi = detail::xi_poly(d, tp);
  const LaurentPoly pn = eigenpoly_y(n, tp);
  const LaurentPoly y = LaurentPoly::y();
  const LaurentPoly body = (LaurentPoly(1) - y * bq) * sh(xi, -1, tp) * pn -
                           (LaurentPoly(1) - y) * xi * sh(pn, -1, tp);
  return LaurentPoly::monomial((Rational(1) - bq).inverse(), -1) * body;
}

}  // namespace mipoly
