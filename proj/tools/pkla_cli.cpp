// pkla: validate, transform and inspect pseudo-Kahler data files.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
// 3 eigenvalue outside Q(i) or internal assertion.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pkla/catalog.hpp"
#include "pkla/corpus.hpp"
#include "pkla/curvature.hpp"
#include "pkla/io.hpp"
#include "pkla/realform.hpp"

using namespace pkla;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries a report to print before exiting with status 1.
class Invalid : public std::runtime_error {
 public:
  Invalid(const std::string& what, json report) : std::runtime_error(what), report(std::move(report)) {}
  json report;
};

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  s << f.rdbuf();
  return s.str();
}

Document load(const std::string& path) { return parse_document(read_input(path)); }

template <class T>
const T& expect(const Document& d, const std::string& command) {
  if (const T* p = std::get_if<T>(&d)) return *p;
  throw UsageError(command + ": unsupported document kind " + kind_name(d));
}

ValidationReport check_J(const RealLie& lie, const RMatrix& J) {
  ValidationReport rep;
  const std::size_t m = lie.dim();
  if (J.rows() != m || J.cols() != m) {
    rep.add("dimension", {m});
    return rep;
  }
  if (!(J * J == -RMatrix::identity(m))) rep.add("J_squared", {}, "J^2", "-id");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RVec lhs = lie.bracket(J.column(i), J.column(j));
      RVec rhs = lie.bracket(unit_vec<Rational>(m, i), unit_vec<Rational>(m, j));
      if (lhs != rhs) rep.add("abelian_J", {i, j}, to_string(lhs), to_string(rhs));
    }
  return rep;
}

LieRealization realization_of(const LieDoc& d) {
  if (!d.omega) throw Invalid("lie_pk document has no omega", {{{"rule", "omega_missing"}, {"indices", json::array()}}});
  LieRealization l = make_realization(d.lie, d.J, *d.omega);
  ValidationReport rep = validate_pk(l);
  if (!rep.ok()) throw Invalid("not a pseudo-Kahler structure with abelian J", json_report(rep));
  return l;
}

APKPair pair_of(const PairDoc& d) { return APKPair(d.algebra, HermitianGram(d.gram)); }

// The pair behind any document, with the map from the document's own real
// chart into the pair's canonical chart (absent for apk_pair input).
struct Resolved {
  APKPair pair;
  std::optional<RMatrix> iso;
};

Resolved resolve(const Document& doc, const std::string& command) {
  if (auto d = std::get_if<PairDoc>(&doc)) return {pair_of(*d), std::nullopt};
  if (auto d = std::get_if<SymmetricDoc>(&doc)) {
    ComplexifiedPair c = complexify_pair(RealSymmetricAlgebra(d->algebra, d->form));
    return {c.pair, c.iso};
  }
  if (auto d = std::get_if<LieDoc>(&doc)) {
    PairFromPK c = pair_from_pk(realization_of(*d));
    return {c.pair, c.iso};
  }
  throw UsageError(command + ": unsupported document kind " + kind_name(doc));
}

// Curvature of the pair pulled back along phi (document chart -> canonical chart).
void pull_back(CurvatureReport& r, const RMatrix& phi) {
  const RMatrix inv = inverse(phi);
  const std::size_t m = phi.rows();
  auto conj_by = [&](const RMatrix& a) { return inv * a * phi; };
  Connection nabla(m, RMatrix(m, m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (!is_zero(phi(q, p))) nabla[p] = nabla[p] + phi(q, p) * conj_by(r.nabla[q]);
  CurvatureTensor riem(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
          Rational c = phi(s, p) * phi(t, q);
          if (!is_zero(c)) riem.at(p, q) = riem.at(p, q) + c * conj_by(r.riemann.at(s, t));
        }
  r.nabla = std::move(nabla);
  r.riemann = std::move(riem);
  r.ricci = phi.transpose() * r.ricci * phi;
  r.gmat = phi.transpose() * r.gmat * phi;
}

json flags_json(const CurvatureReport& r) {
  return {{"flat", r.flat},
          {"ricci_flat", r.ricci_flat},
          {"einstein", r.einstein_factor ? json(to_string(*r.einstein_factor)) : json(nullptr)},
          {"novikov", r.novikov},
          {"two_step", r.two_step},
          {"flat_equivalence", {{"flat", r.c.c1}, {"lsa_associative", r.c.c2}, {"rr_star_zero", r.c.c3}}}};
}

json curvature_json(const CurvatureReport& r, const std::string& chart) {
  json j = flags_json(r);
  j["chart"] = chart;
  j["metric"] = json_matrix(r.gmat);
  j["ricci"] = json_matrix(r.ricci);
  json nabla = json::array();
  for (std::size_t p = 0; p < r.nabla.size(); ++p)
    if (!r.nabla[p].is_zero()) nabla.push_back({{"x", p}, {"matrix", json_matrix(r.nabla[p])}});
  j["nabla"] = nabla;
  json riem = json::array();
  for (std::size_t p = 0; p < r.riemann.dim(); ++p)
    for (std::size_t q = p + 1; q < r.riemann.dim(); ++q)
      if (!r.riemann.at(p, q).is_zero()) riem.push_back({{"x", p}, {"y", q}, {"matrix", json_matrix(r.riemann.at(p, q))}});
  j["riemann"] = riem;
  return j;
}

void print_matrix_entries(std::ostream& os, const RMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) os << indent << "(" << r << "," << c << ") " << to_string(m(r, c)) << "\n";
}

std::string curvature_text(const CurvatureReport& r, const std::string& chart) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "chart: " << chart << "\n";
  os << "flat: " << yn(r.flat) << "\n";
  os << "ricci_flat: " << yn(r.ricci_flat) << "\n";
  os << "einstein: " << (r.einstein_factor ? to_string(*r.einstein_factor) : "none") << "\n";
  os << "novikov: " << yn(r.novikov) << "\n";
  os << "two_step: " << yn(r.two_step) << "\n";
  os << "flat_equivalence: flat=" << yn(r.c.c1) << " lsa_associative=" << yn(r.c.c2)
     << " rr_star_zero=" << yn(r.c.c3) << "\n";
  for (std::size_t p = 0; p < r.nabla.size(); ++p)
    if (!r.nabla[p].is_zero()) {
      os << "nabla[" << p << "]:\n";
      print_matrix_entries(os, r.nabla[p], "  ");
    }
  for (std::size_t p = 0; p < r.riemann.dim(); ++p)
    for (std::size_t q = p + 1; q < r.riemann.dim(); ++q)
      if (!r.riemann.at(p, q).is_zero()) {
        os << "R[" << p << "," << q << "]:\n";
        print_matrix_entries(os, r.riemann.at(p, q), "  ");
      }
  os << "ricci:\n";
  print_matrix_entries(os, r.ricci, "  ");
  return os.str();
}

ValidationReport validate_doc(const Document& doc) {
  ValidationReport rep;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PairDoc>) {
          rep.merge(validate_assoc(d.algebra), "algebra.");
          if (is_zero(determinant(d.gram))) rep.add("hermitian_degenerate", {});
          if (rep.ok()) rep.merge(check_apk(d.algebra, HermitianGram(d.gram)));
        } else if constexpr (std::is_same_v<T, SymmetricDoc>) {
          rep.merge(validate_assoc(d.algebra), "algebra.");
          if (rep.ok()) rep.merge(validate_symmetric(d.algebra, d.form));
        } else if constexpr (std::is_same_v<T, LieDoc>) {
          if (!d.omega) {
            rep.merge(validate_lie(d.lie));
            rep.merge(check_J(d.lie, d.J));
          } else if (is_zero(determinant(*d.omega))) {
            rep.merge(validate_lie(d.lie));
            rep.add("omega_degenerate", {});
          } else {
            rep.merge(validate_pk(make_realization(d.lie, d.J, *d.omega)));
          }
        } else {
          // Extension data is only meaningful against a pair; see `extend`.
          const std::size_t n = d.data.a0.size();
          if (d.data.D.dim() != n || d.data.tau.dim() != n || d.data.b0.size() != n)
            rep.add("dimension", {n});
        }
      },
      doc);
  return rep;
}

json certificate_json(const ReductionCertificate& c) {
  return {{"u0", json_vector(c.u0)},
          {"lambda", json_vector(c.lambda)},
          {"v0", json_vector(c.v0)},
          {"basis_change", json_matrix(c.basis_change)}};
}

json reduction_json(const Reduction& r) {
  return {{"reduced", to_json(to_doc(r.reduced))},
          {"data", to_json(ExtensionDoc{r.data})},
          {"certificate", certificate_json(r.cert)}};
}

json units_json(const std::optional<std::vector<RVec>>& units) {
  if (!units) return nullptr;
  json out = json::array();
  for (const auto& e : *units) out.push_back(json_vector(e));
  return out;
}

// Command bodies return the exit status.

int cmd_validate(const std::string& file) {
  Document doc = load(file);
  ValidationReport rep = validate_doc(doc);
  std::cout << dump({{"kind", kind_name(doc)}, {"valid", rep.ok()}, {"violations", json_report(rep)}});
  return rep.ok() ? 0 : 1;
}

int cmd_lie(const std::string& file) {
  Document doc = load(file);
  LieRealization l;
  if (auto d = std::get_if<PairDoc>(&doc))
    l = build_lie(pair_of(*d));
  else if (auto d = std::get_if<SymmetricDoc>(&doc))
    l = standard_pk(RealSymmetricAlgebra(d->algebra, d->form));
  else
    l = realization_of(expect<LieDoc>(doc, "lie"));
  std::cout << dump(realization_json(l));
  return 0;
}

int cmd_curvature(const std::string& file, const std::string& format) {
  Document doc = load(file);
  Resolved r = resolve(doc, "curvature");
  CurvatureReport rep = curvature_report(r.pair);
  std::string chart = "canonical";
  if (r.iso) {
    pull_back(rep, *r.iso);
    chart = "document";
  }
  std::cout << (format == "json" ? dump(curvature_json(rep, chart)) : curvature_text(rep, chart));
  return 0;
}

int cmd_classify(const std::string& file) {
  Document doc = load(file);
  json out = {{"kind", kind_name(doc)}};
  std::optional<Resolved> r;
  try {
    r = resolve(doc, "classify");
  } catch (const PreconditionError& e) {
    out["apk_valid"] = false;
    out["violations"] = json_report(e.report());
  } catch (const Invalid& e) {
    out["apk_valid"] = false;
    out["violations"] = e.report;
  }
  if (!r) {
    std::cout << dump(out);
    return 1;
  }
  const APKPair& p = r->pair;
  CurvatureReport c = curvature_report(p);
  LieRealization l = realize(p);
  Signature sig = signature(p.form());
  Nilpotency nil = is_nilpotent(p.algebra());
  out["apk_valid"] = true;
  out["dim"] = p.dim();
  out["nilpotent"] = nil.nilpotent;
  out["unimodular"] = is_unimodular(l.lie);
  out["flat"] = c.flat;
  out["ricci_flat"] = c.ricci_flat;
  out["einstein"] = c.einstein_factor ? json(to_string(*c.einstein_factor)) : json(nullptr);
  out["novikov"] = c.novikov;
  out["two_step"] = c.two_step;
  out["aff_type"] = detect_aff(p).has_value();
  out["signature"] = {sig.positive, sig.negative};
  std::cout << dump(out);
  return 0;
}

int cmd_extend(const std::string& pair_file, const std::string& data_file) {
  APKPair p = pair_of(expect<PairDoc>(load(pair_file), "extend"));
  const Document data_doc = load(data_file);
  const DoubleExtensionData& d = expect<ExtensionDoc>(data_doc, "extend --data").data;
  ValidationReport rep = validate_extension_data(p, d);
  if (!rep.ok()) throw Invalid("extension data does not satisfy the hypotheses", json_report(rep));
  std::cout << emit_document(to_doc(double_extend(p, d)));
  return 0;
}

int cmd_reduce(const std::string& file, bool full) {
  APKPair p = pair_of(expect<PairDoc>(load(file), "reduce"));
  if (!full) {
    std::cout << dump(reduction_json(reduce(p)));
    return 0;
  }
  Tower t = tower(p);
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(reduction_json(s));
  json out = {{"base", to_json(to_doc(t.base))}, {"steps", steps}};
  if (t.diagnostic) out["diagnostic"] = *t.diagnostic;
  std::cout << dump(out);
  return t.diagnostic ? 3 : 0;
}

int cmd_cocycles(const std::string& file) {
  Document doc = load(file);
  RealLie lie;
  if (auto d = std::get_if<LieDoc>(&doc)) {
    ValidationReport rep = validate_lie(d->lie);
    if (!rep.ok()) throw Invalid("not a Lie algebra", json_report(rep));
    lie = d->lie;
  } else {
    lie = realize(resolve(doc, "cocycles").pair).lie;
  }
  CocycleSpace cs = cocycle_space(lie);
  json basis = json::array();
  for (const auto& w : cs.basis) basis.push_back(json_matrix(w));
  json out = {{"dim", cs.basis.size()}, {"basis", basis}, {"certificate", nullptr}};
  if (cs.certificate) {
    out["certificate"] = json_vector(*cs.certificate);
    // Name the certificate when it is a single basis vector.
    const RVec& v = *cs.certificate;
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!is_zero(v[k])) ++nonzero, at = k;
    if (nonzero == 1 && !lie.labels().empty()) out["certificate_label"] = lie.labels()[at];
  }
  std::cout << dump(out);
  return 0;
}

int cmd_affine(const std::string& file) {
  Document doc = load(file);
  if (auto d = std::get_if<SymmetricDoc>(&doc)) {
    std::cout << dump(realization_json(standard_pk(RealSymmetricAlgebra(d->algebra, d->form))));
    return 0;
  }
  APKPair p = pair_of(expect<PairDoc>(doc, "affine"));
  std::optional<AffForm> f = detect_aff(p);
  json out = {{"aff_type", f.has_value()}};
  if (f) {
    out["real_form"] = to_json(to_doc(f->S));
    out["real_basis"] = json_matrix(f->real_basis);
    out["iso"] = json_matrix(f->iso);
    out["units"] = units_json(split_units(f->S));
  }
  std::cout << dump(out);
  return 0;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : catalog::names()) std::cout << n << "\n";
    return 0;
  }
  try {
    std::cout << emit_document(catalog_document(name));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_generate(std::uint64_t seed, std::size_t dim, const std::string& kind) {
  auto k = corpus::parse_kind(kind);
  if (!k) throw UsageError("unknown kind " + kind);
  if (dim > corpus::max_dim) throw UsageError("dim must be at most " + std::to_string(corpus::max_dim));
  std::cout << emit_document(to_doc(corpus::generate(seed, dim, *k).pair));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with abelian pseudo-Kahler Lie algebras"};
  app.require_subcommand(1);
  std::string file, data_file, format = "text", name, kind;
  bool full = false;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::function<int()> run;

  auto file_cmd = [&](const std::string& cmd, const std::string& help, std::function<int()> body) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("file", file, "input document, - for stdin")->required();
    sub->callback([&run, body] { run = body; });
    return sub;
  };
  file_cmd("validate", "kind-aware validation report", [&] { return cmd_validate(file); });
  file_cmd("lie", "pseudo-Kahler Lie algebra of the input", [&] { return cmd_lie(file); });
  file_cmd("curvature", "connection, curvature and Ricci tensors", [&] { return cmd_curvature(file, format); })
      ->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  file_cmd("classify", "summary flags", [&] { return cmd_classify(file); });
  file_cmd("extend", "double extension of a pair", [&] { return cmd_extend(file, data_file); })
      ->add_option("--data", data_file, "extension_data document")
      ->required();
  file_cmd("reduce", "one reduction step, or the whole tower", [&] { return cmd_reduce(file, full); })
      ->add_flag("--tower", full, "reduce down to an irreducible base");
  file_cmd("cocycles", "closed 2-forms and a common radical vector", [&] { return cmd_cocycles(file); });
  file_cmd("affine", "standard structure on aff(A), or recognize aff type", [&] { return cmd_affine(file); });

  auto* cat = app.add_subcommand("catalog", "list or print built-in examples");
  cat->add_option("name", name, "example name");
  cat->callback([&] { run = [&] { return cmd_catalog(name); }; });

  auto* gen = app.add_subcommand("generate", "deterministic random pair");
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--dim", dim, "complex dimension")->required();
  gen->add_option("--kind", kind, "tstar, tower or abelian")->required();
  gen->callback([&] { run = [&] { return cmd_generate(seed, dim, kind); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Invalid& e) {
    std::cerr << "invalid: " << e.what() << "\n" << dump(e.report);
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    if (!e.report().ok()) std::cerr << e.report().to_string() << "\n";
    return 1;
  } catch (const DegenerateFormError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const EigenvalueOutsideField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
}
