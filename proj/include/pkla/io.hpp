#pragma once

// JSON documents. Scalars are strings ("3/4", "1/2-5i"); matrices and tables
// are sparse entry lists. Parsing is strict: unknown fields, non-string
// scalars and out-of-range indices are errors.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "pkla/extension.hpp"
#include "pkla/liereal.hpp"

namespace pkla {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw pair data; becomes an APKPair only after validation.
struct PairDoc {
  AssocAlgebra algebra;
  CMatrix gram;
};

struct SymmetricDoc {
  RealAlgebra algebra;
  RMatrix form;
};

struct LieDoc {
  RealLie lie;
  RMatrix J;
  std::optional<RMatrix> omega;
};

struct ExtensionDoc {
  DoubleExtensionData data;
};

using Document = std::variant<PairDoc, SymmetricDoc, LieDoc, ExtensionDoc>;

std::string kind_name(const Document& d);

Document parse_document(const std::string& text);
/// Canonical text: sorted keys, upper-triangle entries for closed tables, two-space indent.
std::string emit_document(const Document& d);
nlohmann::json to_json(const Document& d);

/// Built-in examples as documents; throws std::out_of_range for unknown names.
Document catalog_document(const std::string& name);

PairDoc to_doc(const APKPair& p);
SymmetricDoc to_doc(const RealSymmetricAlgebra& s);
/// Includes the metric and LSA, which parse_document re-derives and checks.
nlohmann::json realization_json(const LieRealization& l);

// Building blocks shared with the command-line tool.
nlohmann::json json_matrix(const RMatrix& m);
nlohmann::json json_matrix(const CMatrix& m);
nlohmann::json json_vector(const RVec& v);
nlohmann::json json_vector(const CVec& v);
nlohmann::json json_report(const ValidationReport& r);
std::string dump(const nlohmann::json& j);

}  // namespace pkla
