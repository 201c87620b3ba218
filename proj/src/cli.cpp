#include "mipoly/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mipoly/base_model.hpp"
#include "mipoly/darboux.hpp"
#include "mipoly/errors.hpp"
#include "mipoly/verifier.hpp"

namespace mipoly {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string family = "jacobi";
  int ctype = 2;
  std::string q = "1/2";
  std::string a = "1/3";
  std::string b = "1/16";
  bool b_given = false;
  std::string indices;
  int nmax = 4;
  int n = -1;
  std::string eps = "1e-24";
  int xmax = 60;
  int prec_bits = 256;
  std::string output = "json";
  std::uint64_t seed = 1;
  std::string suite = "all";
};

// Numeric columns carry this many significant digits.
constexpr int kFloatDigits = 17;

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", kFloatDigits - 1, v);
  return buf;
}

Params build_params(const RunConfig& cfg, const IndexSet& d) {
  const CType ctype = cfg.ctype == 1 ? CType::TypeI : CType::TypeII;
  const Rational q = Rational::parse(cfg.q);
  const Rational a = Rational::parse(cfg.a);
  Params p;
  if (cfg.family == "jacobi") {
    p = Params::jacobi(q, a, Rational::parse(cfg.b), ctype, d.max_index());
  } else if (cfg.family == "laguerre") {
    if (cfg.b_given && !Rational::parse(cfg.b).is_zero()) {
      throw InvalidParams("--b must be 0 for the laguerre family");
    }
    p = Params::laguerre(q, a, ctype, d.max_index());
  } else {
    throw InvalidParams("unknown family '" + cfg.family + "' (expected jacobi or laguerre)");
  }
  require_valid(p, d.max_index());
  return p;
}

Json header(const Params& p, const IndexSet& d) {
  Json j;
  j["family"] = to_string(p.family);
  j["type"] = p.ctype == CType::TypeI ? 1 : 2;
  j["q"] = p.q.to_string();
  j["a"] = p.a.to_string();
  j["b"] = p.b.to_string();
  j["D"] = d.indices();
  return j;
}

Json coeff_pairs(const EtaPoly& e) {
  Json arr = Json::array();
  for (const auto& c : e.coeffs()) arr.push_back({c.numerator_str(), c.denominator_str()});
  if (e.is_zero()) arr.push_back({"0", "1"});
  return arr;
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int cmd_construct(const RunConfig& cfg, const IndexSet& d, const Params& p, std::ostream& out) {
  const bool type_two = p.ctype == CType::TypeII;
  std::vector<std::pair<int, LaurentPoly>> polys;
  for (int n = 0; n <= cfg.nmax; ++n) {
    polys.emplace_back(n, type_two ? detail::multi_indexed_y(d, n, p)
                                   : detail::typeI_raw_poly(d, n, p));
  }
  const LaurentPoly denom =
      type_two ? detail::denominator_y(d, p) : typeI_deformed(d, p).xi_cas;
  if (cfg.output == "csv") {
    out << "n,k,num,den\n";
    for (const auto& [n, poly] : polys) {
      const EtaPoly e = to_eta(poly);
      for (int k = 0; k <= e.degree(); ++k) {
        out << n << ',' << k << ',' << e.coeff(k).numerator_str() << ','
            << e.coeff(k).denominator_str() << '\n';
      }
    }
    return kExitPass;
  }
  Json j = header(p, d);
  j["normalization"] = type_two ? "normalized" : "raw";
  Json den;
  den["basis"] = "eta";
  den["coeffs"] = coeff_pairs(to_eta(denom));
  den["degree"] = to_eta(denom).degree();
  den["value_at_minus_1"] = eval_int_x(denom, -1, p.q).to_string();
  den["value_at_inf"] = eval_infinity(denom).to_string();
  j["denominator"] = den;
  Json arr = Json::array();
  for (const auto& [n, poly] : polys) {
    const EtaPoly e = to_eta(poly);
    Json item;
    item["n"] = n;
    item["basis"] = "eta";
    item["coeffs"] = coeff_pairs(e);
    item["ell_D"] = d.ell();
    item["leading"] = e.leading().to_string();
    item["value_at_0"] = eval_int_x(poly, 0, p.q).to_string();
    item["value_at_inf"] = eval_infinity(poly).to_string();
    arr.push_back(item);
  }
  j["polynomials"] = arr;
  emit(j, out);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, const IndexSet& d, const Params& p, std::ostream& out) {
  SuiteOptions options;
  options.nmax = cfg.nmax;
  options.eps = Rational::parse_decimal(cfg.eps);
  options.xmax = cfg.xmax;
  options.prec_bits = cfg.prec_bits;
  options.seed = cfg.seed;
  options.suite = cfg.suite;
  const VerificationReport report = run_suite(d, p, options);
  if (cfg.output == "csv") {
    out << "name,status,witness,bound\n";
    for (const auto& c : report.checks) {
      out << c.name << ',' << to_string(c.status) << ",\"" << c.witness << "\","
          << (c.bound ? decimal(*c.bound) : "") << '\n';
    }
  } else {
    Json j = header(report.params_echo, report.dset_echo);
    j["status"] = report.passed() ? "pass" : "fail";
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json item;
      item["name"] = c.name;
      item["status"] = to_string(c.status);
      item["witness"] = c.witness;
      if (c.bound) item["bound"] = decimal(*c.bound);
      checks.push_back(item);
    }
    j["checks"] = checks;
    emit(j, out);
  }
  return report.passed() ? kExitPass : kExitFailure;
}

int cmd_zeros(const RunConfig& cfg, const IndexSet& d, const Params& p, std::ostream& out) {
  if (p.ctype != CType::TypeII) throw InvalidParams("zeros supports type 2 only");
  const int n = cfg.n >= 0 ? cfg.n : cfg.nmax;
  const ZerosReport z = zeros_report(d, n, p, cfg.prec_bits);
  if (cfg.output == "json") {
    Json j = header(p, d);
    j["n"] = n;
    j["prec_bits"] = cfg.prec_bits;
    j["physical"] = z.physical;
    j["unphysical"] = z.unphysical;
    j["interlaced_with_next"] = z.interlaced_with_next;
    Json roots = Json::array();
    for (const auto& r : z.roots) roots.push_back({{"re", r.re}, {"im", r.im}, {"physical", r.physical}});
    j["roots"] = roots;
    emit(j, out);
    return kExitPass;
  }
  out << "n,index,re,im,physical\n";
  for (std::size_t i = 0; i < z.roots.size(); ++i) {
    const Root& r = z.roots[i];
    out << n << ',' << i << ',' << r.re << ',' << r.im << ',' << (r.physical ? "true" : "false")
        << '\n';
  }
  return kExitPass;
}

int cmd_table(const RunConfig& cfg, const IndexSet& d, const Params& p, std::ostream& out) {
  const Rational eps = Rational::parse_decimal(cfg.eps);
  const OrthogonalityResult r = p.ctype == CType::TypeII
                                    ? orthogonality_check(d, p, cfg.nmax, eps)
                                    : typeI_orthogonality_check(d, p, cfg.nmax, eps);
  bool ok = true;
  if (cfg.output == "json") {
    Json j = header(p, d);
    j["truncation_x"] = r.tail.truncation_x;
    j["tail_estimate"] = decimal(r.tail.tail_estimate.to_double());
    Json rows = Json::array();
    for (std::size_t n = 0; n < r.diagonal_ratios.size(); ++n) {
      const double dev = (r.diagonal_ratios[n] - r.exact_ratios[n]).abs().to_double();
      const bool row_ok = dev <= r.ratio_bounds[n];
      ok = ok && row_ok;
      rows.push_back({{"n", n},
                      {"ratio", decimal(r.diagonal_ratios[n].to_double())},
                      {"exact", r.exact_ratios[n].to_string()},
                      {"deviation", decimal(dev)},
                      {"bound", decimal(r.ratio_bounds[n])},
                      {"status", row_ok ? "pass" : "fail"}});
    }
    j["rows"] = rows;
    emit(j, out);
  } else {
    out << "n,ratio,exact,exact_decimal,deviation,bound,status\n";
    for (std::size_t n = 0; n < r.diagonal_ratios.size(); ++n) {
      const double dev = (r.diagonal_ratios[n] - r.exact_ratios[n]).abs().to_double();
      const bool row_ok = dev <= r.ratio_bounds[n];
      ok = ok && row_ok;
      out << n << ',' << decimal(r.diagonal_ratios[n].to_double()) << ','
          << r.exact_ratios[n].to_string() << ',' << decimal(r.exact_ratios[n].to_double()) << ','
          << decimal(dev) << ',' << decimal(r.ratio_bounds[n]) << ',' << (row_ok ? "pass" : "fail")
          << '\n';
    }
  }
  return ok ? kExitPass : kExitFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "jacobi or laguerre")->capture_default_str();
  sub->add_option("--type", cfg.ctype, "construction type, 1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  sub->add_option("--q", cfg.q, "q as p/q")->capture_default_str();
  sub->add_option("--a", cfg.a, "a as p/q")->capture_default_str();
  sub->add_option_function<std::string>(
         "--b",
         [&cfg](const std::string& v) {
           cfg.b = v;
           cfg.b_given = true;
         },
         "b as p/q (jacobi only)")
      ->default_str(cfg.b);
  sub->add_option("--indices", cfg.indices, "virtual state labels, e.g. 1,3,5");
  sub->add_option("--nmax", cfg.nmax, "largest degree index n")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--eps", cfg.eps, "relative tail tolerance")->capture_default_str();
  sub->add_option("--xmax", cfg.xmax, "positivity scan limit")->capture_default_str();
  sub->add_option("--prec-bits", cfg.prec_bits, "root finding precision")->capture_default_str();
  sub->add_option("--out", cfg.output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for random parameter points")->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-indexed little q-Jacobi and little q-Laguerre polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  CLI::App* construct = app.add_subcommand("construct", "emit the polynomials as JSON or CSV");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  CLI::App* zeros = app.add_subcommand("zeros", "zeros of one polynomial as CSV");
  CLI::App* table = app.add_subcommand("table", "orthogonality norm ratios as CSV");
  for (CLI::App* sub : {construct, verify, zeros, table}) add_common(sub, cfg);
  verify->add_option("--suite", cfg.suite, "all, or a comma list of sections")
      ->capture_default_str();
  zeros->add_option("--n", cfg.n, "degree index (default: nmax)");
  // Tables and root lists default to CSV.
  for (CLI::App* sub : {zeros, table}) {
    sub->preparse_callback([&cfg](std::size_t) { cfg.output = "csv"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  IndexSet d;
  Params p;
  try {
    d = IndexSet::parse(cfg.indices);
    p = build_params(cfg, d);
    if (cfg.nmax < 0 || cfg.xmax < 10 || cfg.prec_bits < 128) {
      throw InvalidParams("need nmax >= 0, xmax >= 10 and prec-bits >= 128");
    }
    if (!(Rational::parse_decimal(cfg.eps).sign() > 0)) throw InvalidParams("eps must be positive");
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, d, p, out);
    if (verify->parsed()) return cmd_verify(cfg, d, p, out);
    if (zeros->parsed()) return cmd_zeros(cfg, d, p, out);
    return cmd_table(cfg, d, p, out);
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InvalidParams& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mipoly
