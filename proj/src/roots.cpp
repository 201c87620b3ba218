#include "mipoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Eigenvalues>

#include "mipoly/errors.hpp"

namespace mipoly {

namespace {

using boost::multiprecision::mpfr_float;
using Matrix = Eigen::Matrix<mpfr_float, Eigen::Dynamic, Eigen::Dynamic>;

constexpr double kResidualTolerance = 1e-30;

// RAII guard: the MPFR default precision is a global setting.
class PrecisionScope {
 public:
  explicit PrecisionScope(int prec_bits) : saved_(mpfr_float::default_precision()) {
    mpfr_float::default_precision(digits10(prec_bits));
  }
  ~PrecisionScope() { mpfr_float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static unsigned digits10(int prec_bits) {
    return static_cast<unsigned>(std::ceil(prec_bits * 0.30102999566398120));
  }

 private:
  unsigned saved_;
};

struct Complex {
  mpfr_float re;
  mpfr_float im;
};

Complex mul(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Complex div(const Complex& x, const Complex& y) {
  const mpfr_float den = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
}

mpfr_float modulus(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

mpfr_float to_mpfr(const Rational& r) {
  return mpfr_float(r.numerator_str()) / mpfr_float(r.denominator_str());
}

// Horner evaluation of p and p' at z.
void evaluate(const std::vector<mpfr_float>& c, const Complex& z, Complex& value,
              Complex& derivative) {
  value = {mpfr_float(0), mpfr_float(0)};
  derivative = {mpfr_float(0), mpfr_float(0)};
  for (std::size_t k = c.size(); k-- > 0;) {
    derivative = mul(derivative, z);
    derivative.re += value.re;
    derivative.im += value.im;
    value = mul(value, z);
    value.re += c[k];
  }
}

mpfr_float scale_at(const std::vector<mpfr_float>& c, const Complex& z) {
  const mpfr_float r = modulus(z);
  mpfr_float power(1);
  mpfr_float sum(0);
  for (const auto& ck : c) {
    sum += abs(ck) * power;
    power *= r;
  }
  return sum;
}

}  // namespace

std::vector<Root> eta_roots(const EtaPoly& p, int prec_bits) {
  if (prec_bits < 128) throw Error("root finding needs at least 128 bits of precision");
  const int degree = p.degree();
  if (degree <= 0) return {};
  PrecisionScope scope(prec_bits);
  const unsigned digits = PrecisionScope::digits10(prec_bits);

  std::vector<mpfr_float> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.push_back(to_mpfr(r));

  Matrix companion = Matrix::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];
  Eigen::EigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw RootFindingFailure("companion eigenvalues failed");

  const mpfr_float imag_cutoff("1e-20");
  std::vector<std::pair<Complex, Root>> found;
  for (int i = 0; i < degree; ++i) {
    Complex z{solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag()};
    Complex value;
    Complex derivative;
    evaluate(c, z, value, derivative);
    if (modulus(derivative) != 0) {
      const Complex step = div(value, derivative);
      z.re -= step.re;
      z.im -= step.im;
    }
    evaluate(c, z, value, derivative);
    const mpfr_float scale = scale_at(c, z);
    const mpfr_float residual = scale == 0 ? modulus(value) : modulus(value) / scale;
    if (residual > kResidualTolerance) {
      throw RootFindingFailure("root residual " + residual.str(6) + " exceeds 1e-30");
    }
    Root root;
    root.re = z.re.str(digits);
    root.im = z.im.str(digits);
    root.physical = z.re >= 0 && z.re < 1 && abs(z.im) < imag_cutoff;
    root.scaled_residual = static_cast<double>(residual);
    found.emplace_back(z, root);
  }
  std::sort(found.begin(), found.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.first.re != rhs.first.re) return lhs.first.re < rhs.first.re;
    return lhs.first.im < rhs.first.im;
  });
  std::vector<Root> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

bool physical_zeros_interlace(const std::vector<Root>& lower, const std::vector<Root>& upper,
                              int prec_bits) {
  PrecisionScope scope(prec_bits);
  std::vector<mpfr_float> l;
  std::vector<mpfr_float> u;
  for (const auto& r : lower) {
    if (r.physical) l.emplace_back(r.re);
  }
  for (const auto& r : upper) {
    if (r.physical) u.emplace_back(r.re);
  }
  if (u.size() != l.size() + 1) return false;
  std::sort(l.begin(), l.end());
  std::sort(u.begin(), u.end());
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!(u[i] < l[i] && l[i] < u[i + 1])) return false;
  }
  return true;
}

}  // namespace mipoly
