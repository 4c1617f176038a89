#include "curvelab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unistd.h>

namespace curvelab::io {

namespace {

double num(Real x) { return static_cast<double>(x); }

json spectrum_json(const Matrix& m) {
  json out = json::array();
  const Vector ev = eigenvalues(m);
  for (int i = 0; i < ev.size(); ++i) out.push_back(num(ev(i)));
  return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(num(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(num(v(i)));
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw SchemaError(pointer, "expected a non-empty array of rows");
  const auto rows = static_cast<int>(j.size());
  int cols = -1;
  Matrix m;
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const std::string rp = pointer + "/" + std::to_string(r);
    if (!row.is_array()) throw SchemaError(rp, "expected an array");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m.resize(rows, cols);
    }
    if (static_cast<int>(row.size()) != cols)
      throw SchemaError(rp, "row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(cols));
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) throw SchemaError(rp + "/" + std::to_string(c), "expected a number");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

CurvatureOperator parse_operator(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  if (!doc.contains("n")) throw SchemaError("/n", "missing");
  if (!doc["n"].is_number_integer()) throw SchemaError("/n", "expected an integer");
  const int n = doc["n"].get<int>();
  if (n < 2) throw SchemaError("/n", "n must be at least 2");
  if (!doc.contains("basis")) throw SchemaError("/basis", "missing");
  if (!doc["basis"].is_string() || doc["basis"].get<std::string>() != kBasis)
    throw SchemaError("/basis", std::string("expected \"") + kBasis + "\"");
  if (!doc.contains("convention")) throw SchemaError("/convention", "missing");
  const auto& conv = doc["convention"];
  if (!conv.is_string() || (conv.get<std::string>() != kConvention && conv.get<std::string>() != kConventionAscii))
    throw SchemaError("/convention", std::string("expected \"") + kConvention + "\"");
  if (!doc.contains("matrix")) throw SchemaError("/matrix", "missing");
  const Matrix m = matrix_from_json(doc["matrix"], "/matrix");
  const int N = pair_count(n);
  if (m.rows() != N || m.cols() != N)
    throw SchemaError("/matrix", "expected " + std::to_string(N) + "×" + std::to_string(N) + " for n = " +
                                     std::to_string(n) + ", got " + std::to_string(m.rows()) + "×" +
                                     std::to_string(m.cols()));
  return CurvatureOperator(n, m);
}

json operator_to_json(const CurvatureOperator& r) {
  json out;
  out["n"] = r.n();
  out["basis"] = kBasis;
  out["matrix"] = matrix_to_json(r.matrix());
  out["convention"] = kConvention;
  return out;
}

CurvatureOperator load_operator(const std::string& source, int n) {
  if (fixtures::is_fixture_name(source)) return fixtures::by_name(source, n);
  json doc;
  try {
    if (source == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(source);
      if (!in) throw SchemaError("", "cannot open '" + source + "'");
      doc = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_operator(doc);
}

json operator_warnings(const CurvatureOperator& r) {
  json w = json::array();
  if (r.asymmetry() > kAsymmetryWarning) {
    std::ostringstream msg;
    msg << "input matrix asymmetric by " << num(r.asymmetry()) << "; symmetrized";
    w.push_back(msg.str());
  }
  return w;
}

json decomposition_to_json(const CurvatureOperator& r, const CurvatureDecomposition& d) {
  json out;
  out["n"] = r.n();
  out["scal"] = num(d.scal);
  out["ric"] = matrix_to_json(d.ric);
  json parts;
  const std::pair<const char*, const CurvatureOperator*> named[] = {
      {"U", &d.r_u}, {"L", &d.r_l}, {"W", &d.r_w}, {"W4", &d.r_w4}};
  for (const auto& [name, part] : named) {
    parts[std::string(name) + "_norm"] = num(std::sqrt(frobenius(*part, *part)));
    parts[name] = matrix_to_json(part->matrix());
  }
  out["parts"] = parts;
  out["reduced"] = d.reduced;
  out["reconstruction_residual"] = num(d.reconstruction_residual(r));
  out["orthogonality_residual"] = num(d.orthogonality_residual());
  return out;
}

json kterm_to_json(const SymmetricEndomorphism& k) {
  json out;
  out["rep"] = to_string(k.space->kind());
  out["n"] = k.space->n();
  out["p"] = k.space->p();
  out["dim"] = k.dim();
  out["matrix"] = matrix_to_json(k.mat);
  const Vector ev = eigenvalues(k.mat);
  out["spectrum"] = vector_to_json(ev);
  out["lambda_min"] = ev.size() ? num(ev(0)) : 0.0;
  out["symmetry_defect"] = num(k.symmetry_defect);
  return out;
}

json block_structure_to_json(const BlockStructure& b) {
  json blocks = json::array();
  for (const auto& blk : b.blocks) {
    json e;
    e["k"] = blk.k;
    e["dim"] = blk.block.dim();
    e["spectrum"] = spectrum_json(blk.block.mat);
    e["spectral_residual"] = num(blk.spectral_residual);
    blocks.push_back(std::move(e));
  }
  json out;
  out["blocks"] = blocks;
  out["off_block_residual"] = num(b.off_block_residual);
  out["max_spectral_residual"] = num(b.max_spectral_residual);
  return out;
}

json two_plane_to_json(const TwoPlane& sigma) {
  json out;
  out["x"] = vector_to_json(sigma.x);
  out["y"] = vector_to_json(sigma.y);
  out["bivector"] = vector_to_json(sigma.bivector());
  return out;
}

json certificate_to_json(const Certificate& c) {
  json out;
  json query;
  query["k"] = num(c.k);
  query["direction"] = to_string(c.direction);
  query["strict"] = c.strict;
  out["query"] = query;
  out["verdict"] = to_string(c.verdict);
  out["method"] = to_string(c.method);
  json witness = json::object();
  if (c.thorpe) {
    witness["t_star"] = num(c.thorpe->t_star);
    witness["mu"] = num(c.thorpe->mu);
    witness["bracket"] = num(c.thorpe->bracket);
    witness["evaluations"] = c.thorpe->evaluations;
  }
  if (c.witness_plane) witness["plane"] = two_plane_to_json(*c.witness_plane);
  if (c.witness_sec) witness["sec"] = num(*c.witness_sec);
  if (c.hierarchy) {
    json rows = json::array();
    for (const auto& row : c.hierarchy->rows)
      rows.push_back({{"p", row.p}, {"dim", row.dim}, {"lambda_min", num(row.lambda_min)}});
    witness["hierarchy"] = rows;
  }
  out["witness"] = witness;
  const auto& t = c.tolerances;
  out["tolerances"] = {{"strict_margin", num(t.strict_margin)},
                       {"nonstrict_margin", num(t.nonstrict_margin)},
                       {"refutation_margin", num(t.refutation_margin)},
                       {"hierarchy", num(t.hierarchy)},
                       {"golden_section", num(t.golden_section)}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json thmB_report_to_json(const ThmBReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"n", c.n},
                     {"p", c.p},
                     {"rep", c.rep},
                     {"trials", c.trials},
                     {"worst_abs", num(c.worst_abs)},
                     {"worst_spectral", num(c.worst_spectral)}});
  json out;
  out["cases"] = cases;
  out["tolerance"] = num(report.tolerance);
  out["worst"] = num(report.worst());
  out["pass"] = report.pass();
  return out;
}

json integral_report_to_json(const IntegralFormulaReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs)
    pairs.push_back({{"lhs", num(p.lhs)}, {"rhs", num(p.rhs)}, {"relative_error", num(p.relative_error)}});
  json out;
  out["n"] = report.n;
  out["p"] = report.p;
  out["c"] = num(report.c);
  out["c_spread"] = num(report.c_spread);
  out["pairs"] = pairs;
  out["worst_relative"] = num(report.worst_relative());
  return out;
}

json lemma_table_to_json(const LemmaTable& t) {
  return {{"module", t.module}, {"p", t.p},   {"U", t.u},         {"L", t.l},
          {"W", t.w},           {"W4", t.w4}, {"min_n", t.min_n}, {"n", t.n}};
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

}  // namespace curvelab::io
