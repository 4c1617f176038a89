// curvelab: command-line front end.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include "curvelab/certify.hpp"
#include "curvelab/closedform.hpp"
#include "curvelab/io.hpp"
#include "curvelab/knalgebra.hpp"
#include "curvelab/littlewood.hpp"
#include "curvelab/spherical.hpp"
#include "curvelab/weitzenbock.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <random>
#include <string>

using namespace curvelab;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Common {
  std::string input;
  std::string output;
  int n{4};
  std::uint64_t seed{0xC04A7};
};

void emit(const json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-")
    std::cout << text;
  else
    io::write_atomically(output, text);
}

json with_input(json doc, const CurvatureOperator& r, const std::string& source) {
  json out;
  out["input"] = {{"source", source}, {"n", r.n()}};
  for (auto& [key, value] : doc.items()) out[key] = value;
  const json warnings = io::operator_warnings(r);
  if (!warnings.empty()) out["warnings"] = warnings;
  return out;
}

int cmd_decompose(const Common& c) {
  const auto r = io::load_operator(c.input, c.n);
  if (r.n() < 3) throw std::invalid_argument("decompose needs n >= 3");
  emit(with_input(io::decomposition_to_json(r, decompose(r)), r, c.input), c.output);
  return kPass;
}

RepKind parse_rep(const std::string& rep) {
  if (rep == "wedge") return RepKind::Exterior;
  if (rep == "sym") return RepKind::Symmetric;
  if (rep == "sym0") return RepKind::TracelessSymmetric;
  throw std::invalid_argument("unknown representation '" + rep + "'");
}

int cmd_kterm(const Common& c, const std::string& rep, int p) {
  const auto r = io::load_operator(c.input, c.n);
  const RepKind kind = parse_rep(rep);
  if (p < 0) throw std::invalid_argument("--p must be nonnegative");
  if (kind == RepKind::Exterior && p > r.n()) throw std::invalid_argument("--p exceeds n for wedge");
  json doc = io::kterm_to_json(curvature_term(r, cached_space(kind, r.n(), p)));
  if (kind == RepKind::Symmetric) {
    const json blocks = io::block_structure_to_json(block_structure(r, p));
    for (auto& [key, value] : blocks.items()) doc[key] = value;
  }
  emit(with_input(doc, r, c.input), c.output);
  return kPass;
}

struct VerifyOptions {
  std::string suite;
  int pmax{4};
  int trials{10};
};

json suite_thmB(const Common& c, const VerifyOptions& v, bool& pass) {
  if (c.n < 4) throw std::invalid_argument("thmB suite needs n >= 4");
  if (v.pmax < 2) throw std::invalid_argument("--pmax must be at least 2");
  const auto report = verify_thmB(c.n, v.pmax, v.trials, c.seed);
  pass = report.pass();
  return io::thmB_report_to_json(report);
}

json suite_integral(const Common& c, const VerifyOptions& v, bool& pass) {
  if (c.n < 2) throw std::invalid_argument("integral suite needs n >= 2");
  if (v.pmax < 2) throw std::invalid_argument("--pmax must be at least 2");
  constexpr Real rel_tol = 1e-7;
  constexpr Real c_tol = 1e-8;
  std::mt19937_64 rng(c.seed);
  json reports = json::array();
  pass = true;
  for (int p = 2; p <= v.pmax; ++p) {
    const auto r = fixtures::random(c.n, rng);
    const auto report = verify_integral_formula(r, p, v.trials, c.seed + p);
    const bool ok = report.worst_relative() <= rel_tol && report.c_spread <= c_tol;
    pass = pass && ok;
    json j = io::integral_report_to_json(report);
    j["pass"] = ok;
    reports.push_back(std::move(j));
  }
  return {{"reports", reports}, {"relative_tolerance", double(rel_tol)}, {"c_tolerance", double(c_tol)}};
}

json suite_lemmas(const VerifyOptions& v, bool& pass) {
  if (v.pmax < 2) throw std::invalid_argument("--pmax must be at least 2");
  json sym = json::array();
  json wedge = json::array();
  pass = true;
  for (int p = 2; p <= v.pmax; ++p) {
    const auto s = verify_lemma_sym(p);
    const auto w = verify_lemma_wedge(p);
    pass = pass && s.u == 1 && s.l == 1 && s.w == 1 && s.w4 == 0;
    pass = pass && w.u == 1 && w.l == 1 && w.w == 1 && w.w4 == 1;
    sym.push_back(io::lemma_table_to_json(s));
    wedge.push_back(io::lemma_table_to_json(w));
  }
  return {{"sym", sym}, {"wedge", wedge}};
}

json suite_gpowers(const Common& c, const VerifyOptions& v, bool& pass) {
  constexpr Real tol = 1e-10;
  const int pmax = std::min(v.pmax, 4);
  json rows = json::array();
  pass = true;
  for (auto algebra : {KNAlgebra::Exterior, KNAlgebra::SymmetricFull, KNAlgebra::SymmetricTraceless}) {
    for (int p = 0; p <= pmax; ++p) {
      if (algebra == KNAlgebra::Exterior && p > c.n) continue;
      const auto g = iterated_g_power(algebra, c.n, p);
      const Matrix expected = Real(factorial(p)) * Matrix::Identity(g.mat.rows(), g.mat.cols());
      const Real residual = max_abs_diff(g.mat, expected);
      pass = pass && residual <= tol;
      rows.push_back({{"algebra", to_string(algebra)}, {"n", c.n}, {"p", p},
                      {"dim", g.mat.rows()}, {"residual", double(residual)}});
    }
  }
  return {{"checks", rows}, {"tolerance", double(tol)}};
}

int cmd_verify(const Common& c, const VerifyOptions& v) {
  bool pass = false;
  json doc;
  if (v.suite == "thmB")
    doc = suite_thmB(c, v, pass);
  else if (v.suite == "integral")
    doc = suite_integral(c, v, pass);
  else if (v.suite == "lemmas")
    doc = suite_lemmas(v, pass);
  else if (v.suite == "gpowers")
    doc = suite_gpowers(c, v, pass);
  else
    throw std::invalid_argument("unknown suite '" + v.suite + "'");
  json out;
  out["suite"] = v.suite;
  out["seed"] = c.seed;
  out["pass"] = pass;
  for (auto& [key, value] : doc.items()) out[key] = value;
  emit(out, c.output);
  return pass ? kPass : kFail;
}

struct CertifyOptions {
  double k{0};
  bool strict{false};
  bool upper{false};
  int pmax{6};
  int restarts{20};
};

int cmd_certify(const Common& c, const CertifyOptions& o) {
  const auto r = io::load_operator(c.input, c.n);
  if (o.pmax < 2) throw std::invalid_argument("--pmax must be at least 2");
  const auto dir = o.upper ? BoundDirection::AtMost : BoundDirection::AtLeast;
  const auto cert = certify(r, o.k, o.strict, dir, o.pmax, o.restarts, c.seed);
  emit(with_input(io::certificate_to_json(cert), r, c.input), c.output);
  return kPass;
}

void add_common(CLI::App* sub, Common& c, bool needs_input) {
  if (needs_input)
    sub->add_option("input", c.input,
                    "operator JSON file, '-' for stdin, or a fixture: identity, hodge-star, s2xs2, RU, RL, RW, RW4")
        ->required();
  sub->add_option("--n", c.n, "dimension for fixtures and generated operators")->capture_default_str();
  sub->add_option("-o,--output", c.output, "output file (default stdout)");
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature terms of Weitzenböck formulas, closed forms and sectional-curvature certificates"};
  app.require_subcommand(1);

  Common common;
  std::string rep;
  int p = 2;
  VerifyOptions verify;
  CertifyOptions cert;

  auto* dec = app.add_subcommand("decompose", "scalar and Ricci curvature and the four orthogonal parts");
  add_common(dec, common, true);

  auto* kt = app.add_subcommand("kterm", "K(R, ρ) for ρ = Λ^p, Sym^p or Sym^p_0");
  add_common(kt, common, true);
  kt->add_option("--rep", rep, "wedge, sym or sym0")->required()->check(CLI::IsMember({"wedge", "sym", "sym0"}));
  kt->add_option("--p", p, "degree")->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, common, false);
  ver->add_option("--suite", verify.suite, "thmB, integral, lemmas or gpowers")
      ->required()
      ->check(CLI::IsMember({"thmB", "integral", "lemmas", "gpowers"}));
  ver->add_option("--pmax", verify.pmax, "largest degree")->capture_default_str();
  ver->add_option("--trials", verify.trials, "random trials per case")->capture_default_str();

  auto* cer = app.add_subcommand("certify", "certify or refute sec >= k (or sec <= k with --upper)");
  add_common(cer, common, true);
  cer->add_option("--k", cert.k, "curvature bound")->required();
  cer->add_flag("--strict", cert.strict, "strict inequality");
  cer->add_flag("--upper", cert.upper, "test sec <= k instead");
  cer->add_option("--pmax", cert.pmax, "largest degree of the hierarchy table")->capture_default_str();
  cer->add_option("--restarts", cert.restarts, "random restarts of the Grassmannian search")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*dec) return cmd_decompose(common);
    if (*kt) return cmd_kterm(common, rep, p);
    if (*ver) return cmd_verify(common, verify);
    if (*cer) return cmd_certify(common, cert);
  } catch (const io::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
