#include "pkla/io.hpp"

#include <map>
#include <set>

#include "pkla/catalog.hpp"

namespace pkla {

using nlohmann::json;

namespace {

template <class T>
T parse_scalar(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": scalars must be strings");
  try {
    if constexpr (std::is_same_v<T, Rational>)
      return parse_rational(v.get<std::string>());
    else
      return parse_complex(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw ParseError(where + ": not a " + (std::is_same_v<T, Rational> ? "rational" : "Gaussian rational") +
                     " literal: \"" + v.get<std::string>() + "\"");
  }
}

void require_keys(const json& obj, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : obj.items())
    if (!required.count(k) && !optional.count(k)) throw ParseError(where + ": unknown field \"" + k + "\"");
  for (const auto& k : required)
    if (!obj.contains(k)) throw ParseError(where + ": missing field \"" + k + "\"");
}

std::size_t parse_index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError(where + ": index must be a non-negative integer");
  auto k = v.get<std::size_t>();
  if (k >= bound) throw ParseError(where + ": index " + std::to_string(k) + " out of range (dim " + std::to_string(bound) + ")");
  return k;
}

template <class T>
Vec<T> parse_vector(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if (v.size() != n)
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  Vec<T> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(parse_scalar<T>(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

enum class Closure { none, symmetric, hermitian, skew };

// Sparse {row, col, value} entries of a square matrix; the mirrored entry is
// filled in according to the closure and disagreements are rejected.
template <class V, class Read, class Mirror>
std::map<std::pair<std::size_t, std::size_t>, V> parse_entries(const json& arr, std::size_t n, Closure closure,
                                                               const std::string& where, Read read, Mirror mirror) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of entries");
  std::map<std::pair<std::size_t, std::size_t>, V> out;
  auto put = [&](std::size_t r, std::size_t c, const V& v, const std::string& at) {
    auto [it, fresh] = out.emplace(std::make_pair(r, c), v);
    if (!fresh && !(it->second == v)) throw ParseError(at + ": conflicting entry for (" + std::to_string(r) + ", " + std::to_string(c) + ")");
  };
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    require_keys(arr[e], {"row", "col", "value"}, {}, at);
    std::size_t r = parse_index(arr[e]["row"], n, at + ".row"), c = parse_index(arr[e]["col"], n, at + ".col");
    V v = read(arr[e]["value"], at + ".value");
    put(r, c, v, at);
    if (closure != Closure::none) put(c, r, mirror(v), at);
  }
  return out;
}

template <class T>
Matrix<T> parse_matrix(const json& arr, std::size_t n, Closure closure, const std::string& where) {
  auto read = [](const json& v, const std::string& w) { return parse_scalar<T>(v, w); };
  auto mirror = [&](const T& v) -> T {
    if (closure == Closure::skew) return -v;
    if (closure == Closure::hermitian) return conj(v);
    return v;
  };
  Matrix<T> m(n, n);
  for (const auto& [rc, v] : parse_entries<T>(arr, n, closure, where, read, mirror)) m(rc.first, rc.second) = v;
  return m;
}

template <class T>
Algebra<T> parse_table(const json& arr, std::size_t n, Closure closure, std::vector<std::string> labels,
                       const std::string& where) {
  auto read = [n](const json& v, const std::string& w) { return parse_vector<T>(v, n, w); };
  auto mirror = [&](const Vec<T>& v) {
    if (closure != Closure::skew) return v;
    Vec<T> out;
    for (const auto& x : v) out.push_back(-x);
    return out;
  };
  ProductTable<T> t(n);
  for (const auto& [rc, v] : parse_entries<Vec<T>>(arr, n, closure, where, read, mirror)) {
    if (closure == Closure::skew && rc.first == rc.second && !is_zero(v))
      throw ParseError(where + ": nonzero bracket of a basis element with itself");
    t.set_one_sided(rc.first, rc.second, v);
  }
  return t.build(std::move(labels));
}

std::size_t parse_dim(const json& j) {
  if (!j["dim"].is_number_unsigned()) throw ParseError("dim: expected a non-negative integer");
  auto n = j["dim"].get<std::size_t>();
  if (n > 64) throw ParseError("dim: " + std::to_string(n) + " exceeds the supported maximum of 64");
  return n;
}

std::vector<std::string> parse_labels(const json& j, std::size_t n) {
  if (!j.contains("labels")) return {};
  const json& l = j["labels"];
  if (!l.is_array() || l.size() != n) throw ParseError("labels: expected " + std::to_string(n) + " strings");
  std::vector<std::string> out;
  for (const auto& s : l) {
    if (!s.is_string()) throw ParseError("labels: expected strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

template <class T>
json scalar_json(const T& v) { return to_string(v); }

template <class T>
json vector_json(const Vec<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

template <class T>
json matrix_json(const Matrix<T>& m, bool upper_only, bool strict) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (upper_only && (strict ? c <= r : c < r)) continue;
      if (is_zero(m(r, c))) continue;
      out.push_back({{"row", r}, {"col", c}, {"value", scalar_json(m(r, c))}});
    }
  return out;
}

template <class T>
json table_json(const Algebra<T>& a, bool upper_only, bool strict) {
  const std::size_t n = a.dim();
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (upper_only && (strict ? j <= i : j < i)) continue;
      Vec<T> v = a.product(unit_vec<T>(n, i), unit_vec<T>(n, j));
      if (is_zero(v)) continue;
      out.push_back({{"row", i}, {"col", j}, {"value", vector_json(v)}});
    }
  return out;
}

json labels_json(const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

Document parse_object(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("document must be an object with a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "apk_pair") {
    require_keys(j, {"kind", "dim", "products", "hermitian"}, {"labels"}, "apk_pair");
    std::size_t n = parse_dim(j);
    return PairDoc{parse_table<Complex>(j["products"], n, Closure::symmetric, parse_labels(j, n), "products"),
                   parse_matrix<Complex>(j["hermitian"], n, Closure::hermitian, "hermitian")};
  }
  if (kind == "real_symmetric_algebra") {
    require_keys(j, {"kind", "dim", "products", "form"}, {"labels"}, "real_symmetric_algebra");
    std::size_t n = parse_dim(j);
    return SymmetricDoc{parse_table<Rational>(j["products"], n, Closure::symmetric, parse_labels(j, n), "products"),
                        parse_matrix<Rational>(j["form"], n, Closure::symmetric, "form")};
  }
  if (kind == "lie_pk") {
    require_keys(j, {"kind", "dim", "brackets", "J"}, {"labels", "omega", "metric", "lsa"}, "lie_pk");
    std::size_t n = parse_dim(j);
    LieDoc d{RealLie(parse_table<Rational>(j["brackets"], n, Closure::skew, parse_labels(j, n), "brackets")),
             parse_matrix<Rational>(j["J"], n, Closure::none, "J"), std::nullopt};
    if (j.contains("omega")) d.omega = parse_matrix<Rational>(j["omega"], n, Closure::skew, "omega");
    if (j.contains("metric") || j.contains("lsa")) {
      if (!d.omega) throw ParseError("metric/lsa given without omega");
      LieRealization l = [&] {
        try {
          return make_realization(d.lie, d.J, *d.omega);
        } catch (const DegenerateFormError&) {
          throw ParseError("metric/lsa given but omega is degenerate");
        }
      }();
      if (j.contains("metric") && !(parse_matrix<Rational>(j["metric"], n, Closure::symmetric, "metric") == l.gmat))
        throw ParseError("metric: disagrees with the metric derived from omega and J");
      if (j.contains("lsa") && !(parse_table<Rational>(j["lsa"], n, Closure::none, {}, "lsa") == l.lsa))
        throw ParseError("lsa: disagrees with the product derived from omega");
    }
    return d;
  }
  if (kind == "extension_data") {
    require_keys(j, {"kind", "dim", "D", "tau", "a0", "b0", "eps", "alpha0"}, {}, "extension_data");
    std::size_t n = parse_dim(j);
    return ExtensionDoc{{LinearOperator(parse_matrix<Complex>(j["D"], n, Closure::none, "D")),
                         SemilinearOperator(parse_matrix<Complex>(j["tau"], n, Closure::none, "tau")),
                         parse_vector<Complex>(j["a0"], n, "a0"), parse_vector<Complex>(j["b0"], n, "b0"),
                         parse_scalar<Complex>(j["eps"], "eps"), parse_scalar<Complex>(j["alpha0"], "alpha0")}};
  }
  throw ParseError("unknown document kind \"" + kind + "\"");
}

}  // namespace

std::string kind_name(const Document& d) {
  static const char* names[] = {"apk_pair", "real_symmetric_algebra", "lie_pk", "extension_data"};
  return names[d.index()];
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return parse_object(j);
}

json to_json(const Document& d) {
  json j;
  j["kind"] = kind_name(d);
  if (auto p = std::get_if<PairDoc>(&d)) {
    j["dim"] = p->algebra.dim();
    j["labels"] = labels_json(p->algebra.labels());
    j["products"] = table_json(p->algebra, true, false);
    j["hermitian"] = matrix_json(p->gram, true, false);
  } else if (auto s = std::get_if<SymmetricDoc>(&d)) {
    j["dim"] = s->algebra.dim();
    j["labels"] = labels_json(s->algebra.labels());
    j["products"] = table_json(s->algebra, true, false);
    j["form"] = matrix_json(s->form, true, false);
  } else if (auto l = std::get_if<LieDoc>(&d)) {
    j["dim"] = l->lie.dim();
    j["labels"] = labels_json(l->lie.labels());
    j["brackets"] = table_json(l->lie.table(), true, true);
    j["J"] = matrix_json(l->J, false, false);
    if (l->omega) j["omega"] = matrix_json(*l->omega, true, true);
  } else {
    const auto& e = std::get<ExtensionDoc>(d).data;
    j["dim"] = e.a0.size();
    j["D"] = matrix_json(e.D.matrix(), false, false);
    j["tau"] = matrix_json(e.tau.matrix(), false, false);
    j["a0"] = vector_json(e.a0);
    j["b0"] = vector_json(e.b0);
    j["eps"] = scalar_json(e.eps);
    j["alpha0"] = scalar_json(e.alpha0);
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string emit_document(const Document& d) { return dump(to_json(d)); }

Document catalog_document(const std::string& name) {
  if (name == "two-step-5d") return to_doc(catalog::two_step_5d());
  if (name == "flat-4d") return to_doc(catalog::flat_4d());
  if (name == "einstein-c") return to_doc(catalog::einstein_c());
  if (name == "kodaira-thurston") return to_doc(catalog::kodaira_thurston());
  if (name == "n7") {
    LieRealization l = catalog::n7();
    return LieDoc{l.lie, l.J, l.omega};
  }
  if (name == "remark-2-10") {
    AffLie a = aff(catalog::remark_algebra());
    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= a.lie.dim(); ++k) labels.push_back("E" + std::to_string(k));
    RealLie lie(RealAlgebra(a.lie.dim(), a.lie.table().constants(), labels));
    return LieDoc{lie, a.J, std::nullopt};
  }
  throw std::out_of_range("no catalog entry named \"" + name + "\"");
}

PairDoc to_doc(const APKPair& p) { return {p.algebra(), p.form().matrix()}; }

SymmetricDoc to_doc(const RealSymmetricAlgebra& s) { return {s.algebra(), s.form()}; }

json realization_json(const LieRealization& l) {
  json j = to_json(LieDoc{l.lie, l.J, l.omega});
  j["metric"] = matrix_json(l.gmat, true, false);
  j["lsa"] = table_json(l.lsa, false, false);
  return j;
}

json json_matrix(const RMatrix& m) { return matrix_json(m, false, false); }
json json_matrix(const CMatrix& m) { return matrix_json(m, false, false); }
json json_vector(const RVec& v) { return vector_json(v); }
json json_vector(const CVec& v) { return vector_json(v); }

json json_report(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.items()) {
    json item = {{"rule", v.rule}, {"indices", v.indices}};
    if (!v.lhs.empty()) item["lhs"] = v.lhs;
    if (!v.rhs.empty()) item["rhs"] = v.rhs;
    out.push_back(item);
  }
  return out;
}

}  // namespace pkla
