#pragma once

// JSON formats: the operator schema, and serialization of every report.
// Numbers are written as doubles in shortest round-trip form.

#include "curvelab/certify.hpp"
#include "curvelab/closedform.hpp"
#include "curvelab/curvature.hpp"
#include "curvelab/littlewood.hpp"
#include "curvelab/spherical.hpp"
#include "curvelab/weitzenbock.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace curvelab::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kBasis = "lex-pairs";
inline constexpr const char* kConvention = "sec(X∧Y)=R(X∧Y,X∧Y)";
/// ASCII spelling accepted on input.
inline constexpr const char* kConventionAscii = "sec(X^Y)=R(X^Y,X^Y)";
/// Asymmetry above this is reported as a warning.
inline constexpr Real kAsymmetryWarning = 1e-6;

/// Input that does not match the operator schema. `pointer` is a JSON
/// pointer to the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

CurvatureOperator parse_operator(const json& doc);
json operator_to_json(const CurvatureOperator& r);

/// A fixture name ("identity", "hodge-star", "s2xs2", "RU", "RL", "RW",
/// "RW4") built in dimension `n`, "-" for stdin, or a file path.
CurvatureOperator load_operator(const std::string& source, int n);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& pointer);
json vector_to_json(const Vector& v);

json decomposition_to_json(const CurvatureOperator& r, const CurvatureDecomposition& d);
json kterm_to_json(const SymmetricEndomorphism& k);
json block_structure_to_json(const BlockStructure& b);
json two_plane_to_json(const TwoPlane& sigma);
json certificate_to_json(const Certificate& c);
json thmB_report_to_json(const ThmBReport& report);
json integral_report_to_json(const IntegralFormulaReport& report);
json lemma_table_to_json(const LemmaTable& t);

/// Warnings attached to an operator input (asymmetry).
json operator_warnings(const CurvatureOperator& r);

/// Writes `text` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace curvelab::io
