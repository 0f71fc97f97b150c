// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pkla/curvature.hpp"
#include "pkla/extension.hpp"
#include "pkla/io.hpp"
#include "pkla/realform.hpp"

using namespace pkla;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  // Runs body, turning any exception into a failure tagged with where.
  void guard(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, where + ": exception: " + e.what());
    }
  }

  void note(std::string s) { notes_.push_back(std::move(s)); }
  bool passed() const { return failures_.empty() && checks_ > 0; }

  std::string line(double seconds) const {
    std::ostringstream os;
    os << "criterion " << id_ << " [" << title_ << "]: " << (passed() ? "PASS" : "FAIL") << " (" << checks_
       << " checks, " << failures_.size() << " failed";
    for (const auto& n : notes_) os << ", " << n;
    os << ", " << static_cast<long>(seconds * 1000) << " ms)";
    for (std::size_t k = 0; k < failures_.size() && k < 5; ++k) os << "\n    " << failures_[k];
    return os.str();
  }

 private:
  int id_;
  std::string title_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Entry {
  std::string name;
  APKPair pair;
};

// Per-pair results computed once in criterion 3 and reused by 4 and 6.
struct Computed {
  std::optional<CurvatureReport> report;
  std::optional<Tower> tower;
  std::optional<AffForm> aff;
};

// Generated pairs in complex dims 1..8 over the three generator kinds.
std::vector<Entry> build_corpus() {
  std::vector<Entry> out;
  auto per_dim = [](std::size_t d) -> std::uint64_t { return d <= 1 ? 6 : d <= 3 ? 20 : d <= 4 ? 12 : d <= 6 ? 4 : 3; };
  for (std::size_t d = 1; d <= 8; ++d)
    for (auto kind : {corpus::Kind::abelian, corpus::Kind::tstar, corpus::Kind::tower}) {
      if (kind == corpus::Kind::tower && d < 2) continue;
      for (std::uint64_t k = 0; k < per_dim(d); ++k) {
        std::uint64_t seed = 1000 * d + 37 * k + 1;
        out.push_back({corpus::kind_name(kind) + "/d" + std::to_string(d) + "/s" + std::to_string(seed),
                       corpus::generate(seed, d, kind).pair});
      }
    }
  return out;
}

CMatrix complex_part(const RMatrix& iso, std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(iso(r, c), iso(n + r, c));
  return m;
}

// Connection, curvature and Ricci in the canonical chart, by every route plus the Koszul oracle.
void route_agreement(Criterion& c, const std::string& name, const APKPair& p) {
  LieRealization l = build_lie(p);
  Connection n1 = route::nabla_apk(p), n2 = route::nabla_lsa(l);
  c.expect(n1 == n2, name + ": nabla apk vs lsa");
  CurvatureTensor r1 = route::riemann_apk(p), r2 = route::riemann_lsa(l), r3 = route::riemann_commutator(l, n2);
  c.expect(r1 == r2, name + ": riemann apk vs lsa");
  c.expect(r1 == r3, name + ": riemann apk vs commutator");
  RMatrix k1 = route::ricci_apk(p), k2 = route::ricci_lsa(l), k3 = route::ricci_contraction(r1);
  c.expect(k1 == k2, name + ": ricci apk vs killing");
  c.expect(k1 == k3, name + ": ricci apk vs contraction");

  const std::size_t m = l.dim();
  if (m > 8) return;  // the oracle is cubic in m^2; larger pairs are covered by the routes alone
  auto nabla = oracle::koszul(l.lie, l.gmat);
  c.expect(n1 == nabla, name + ": nabla vs koszul oracle");
  auto r = oracle::curvature(l.lie, nabla);
  bool same = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) same = same && r1.at(a, b) == r[a * m + b];
  c.expect(same, name + ": riemann vs oracle");
  c.expect(k1 == oracle::ricci(r, m), name + ": ricci vs oracle");
}

// LSA route on a realization given directly (not via a pair) against the oracle.
void realization_agreement(Criterion& c, const std::string& name, const LieRealization& l) {
  const std::size_t m = l.dim();
  auto nabla = oracle::koszul(l.lie, l.gmat);
  c.expect(route::nabla_lsa(l) == nabla, name + ": lsa nabla vs koszul oracle");
  auto r = oracle::curvature(l.lie, nabla);
  CurvatureTensor r2 = route::riemann_lsa(l);
  bool same = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) same = same && r2.at(a, b) == r[a * m + b];
  c.expect(same, name + ": lsa riemann vs oracle");
  c.expect(route::ricci_lsa(l) == oracle::ricci(r, m), name + ": killing ricci vs oracle");
  c.expect(route::riemann_commutator(l, nabla) == r2, name + ": commutator riemann vs lsa");
}

std::vector<Entry> metric_catalog() {
  return {{"two-step-5d", catalog::two_step_5d()},
          {"flat-4d", catalog::flat_4d()},
          {"einstein-c", catalog::einstein_c()},
          {"kodaira-thurston", complexify_pair(catalog::kodaira_thurston()).pair},
          {"n7", pair_from_pk(catalog::n7()).pair}};
}

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
  c.guard("remark-2-10", [&] {
    AffLie rem = aff(catalog::remark_algebra());
    CocycleSpace cs = cocycle_space(rem.lie);
    c.expect(cs.certificate.has_value(), "remark-2-10: no degeneracy certificate");
    if (cs.certificate)
      c.expect(RSubspace::span({*cs.certificate}, 6) == RSubspace::span({th::re(6, 5)}, 6),
               "remark-2-10: certificate is not E6");
  });

  c.guard("n7", [&] {
    LieRealization n7 = catalog::n7();
    c.expect(validate_pk(n7).ok(), "n7: validate_pk");
    RVec e1 = th::re(6, 0), e4 = th::re(6, 3);
    c.expect(n7.lsa.product(n7.lsa.product(e1, e4), e1) != n7.lsa.product(e1, n7.lsa.product(e4, e1)),
             "n7: (E1.E4).E1 == E1.(E4.E1)");
    c.expect(is_nilpotent_lie(n7.lie), "n7: not nilpotent");
    c.expect(route::ricci_lsa(n7).is_zero(), "n7: Ricci != 0");
    c.expect(ricci(pair_from_pk(n7).pair).is_zero(), "n7: Ricci of the associated pair != 0");
  });

  c.guard("two-step-5d", [&] {
    APKPair p = catalog::two_step_5d();
    c.expect(check_apk(p.algebra(), p.form()).ok(), "two-step-5d: APK");
    c.expect(p.rstar(3)(th::e(5, 2)) == th::e(5, 0), "two-step-5d: R*_{u3} u2 != u0");
    c.expect(p.rstar(4)(th::e(5, 2)) == th::e(5, 0) + th::e(5, 1), "two-step-5d: R*_{u4} u2 != u0 + u1");
    c.expect(oracle::rstar(p.algebra(), p.form().matrix(), th::e(5, 3), th::e(5, 2)) == th::e(5, 0),
             "two-step-5d: oracle R*_{u3} u2");
    c.expect(is_two_step_pair(p), "two-step-5d: not two-step");
    c.expect(!is_flat(p), "two-step-5d: flat");
    c.expect(ricci(p).is_zero(), "two-step-5d: Ricci != 0");
  });

  c.guard("flat-4d", [&] {
    APKPair p = catalog::flat_4d();
    c.expect(check_apk(p.algebra(), p.form()).ok(), "flat-4d: APK");
    c.expect(is_flat(p), "flat-4d: not flat");
    c.expect(!is_nilpotent(p.algebra()).nilpotent, "flat-4d: nilpotent");
    c.expect(!einstein_check(p).has_value(), "flat-4d: einstein factor present");
  });

  c.guard("einstein-c", [&] {
    APKPair p = catalog::einstein_c(1);
    LieRealization l = build_lie(p);
    RMatrix ric = oracle::ricci(oracle::curvature(l.lie, oracle::koszul(l.lie, l.gmat)), 2);
    c.expect(ric(0, 0) == -4, "einstein-c: oracle Ric(1,1) != -4");
    c.expect(ricci(p)(0, 0) == -4, "einstein-c: Ric(1,1) != -4");
    c.expect(l.gmat(0, 0) == -4, "einstein-c: g(1,1) != -4");
    c.expect(einstein_check(p) == Rational(1), "einstein-c: gamma != 1");
  });
}

void criterion2(Criterion& c, const std::vector<Entry>& corpus) {
  for (const Entry& e : metric_catalog()) c.guard(e.name, [&] { route_agreement(c, e.name, e.pair); });
  c.guard("n7 realization", [&] { realization_agreement(c, "n7", catalog::n7()); });
  c.guard("kodaira-thurston realization",
          [&] { realization_agreement(c, "kodaira-thurston", standard_pk(catalog::kodaira_thurston())); });
  // remark-2-10 carries no invariant metric: every closed 2-form shares the radical vector E6.
  c.guard("remark-2-10", [&] {
    CocycleSpace cs = cocycle_space(aff(catalog::remark_algebra()).lie);
    c.expect(cs.certificate.has_value(), "remark-2-10: a non-degenerate cocycle exists");
  });
  for (const Entry& e : corpus) c.guard(e.name, [&] { route_agreement(c, e.name, e.pair); });
  c.note(std::to_string(corpus.size()) + " corpus pairs + 6 catalog entries");
}

// Hermitian perturbations of valid Grams, kept non-degenerate.
std::vector<std::pair<AssocAlgebra, CMatrix>> perturbed(const std::vector<Entry>& corpus) {
  std::vector<std::pair<AssocAlgebra, CMatrix>> out;
  corpus::Rng rng(2024);
  for (const Entry& e : corpus) {
    const std::size_t n = e.pair.dim();
    if (n < 2 || n > 5 || power_ideal(e.pair.algebra(), 2).is_zero()) continue;
    for (int attempt = 0; attempt < 4; ++attempt) {
      CMatrix g = e.pair.form().matrix();
      std::size_t i = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
      Complex d = i == j ? Complex(rng.small_rational(2, true)) : rng.small_complex(2, true);
      g(i, j) = g(i, j) + d;
      if (i != j) g(j, i) = g(j, i) + conj(d);
      if (rank(g) == n) {
        out.emplace_back(e.pair.algebra(), g);
        break;
      }
    }
  }
  return out;
}

void criterion3(Criterion& c, const std::vector<Entry>& corpus, std::vector<Computed>& computed) {
  corpus::Rng rng(99);
  std::size_t reducible = 0, two_step = 0, aff_type = 0, nilpotent = 0;

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const APKPair& p = corpus[idx].pair;
    const std::size_t n = p.dim();
    const std::string& name = corpus[idx].name;
    Computed& mine = computed[idx];

    // (a) compatibility certificate versus the Lie-side invariants of the raw construction.
    c.guard(name + " a", [&] {
      bool apk = check_apk(p.algebra(), p.form()).ok();
      c.expect(apk, name + ": corpus pair not APK");
      c.expect(apk == validate_pk(oracle::lie_from_raw(p.algebra(), p.form().matrix())).ok(),
               name + ": (a) APK certificate disagrees with Lie invariants");
    });

    LieRealization l = build_lie(p);
    c.guard(name + " report", [&] { mine.report = curvature_report(p); });
    if (!mine.report) continue;
    const CurvatureReport& rep = *mine.report;
    const RMatrix& ric = rep.ricci;

    // (b) nilpotency.
    c.guard(name + " b", [&] {
      Nilpotency nil = is_nilpotent(p.algebra());
      c.expect(nil.nilpotent == is_nilpotent_lie(l.lie), name + ": (b) nilpotent U vs nilpotent g");
      c.expect(nil.nilpotent == is_unimodular(l.lie), name + ": (b) nilpotent U vs unimodular");
      if (!nil.nilpotent) return;
      ++nilpotent;
      c.expect(ric.is_zero(), name + ": (b) nilpotent but Ricci != 0");
      const std::size_t power = 2 * *nil.index;
      std::vector<CVec> xs;
      for (std::size_t j = 0; j < n; ++j) xs.push_back(th::e(n, j));
      CVec mix(n, Complex(0));
      for (std::size_t j = 0; j < n; ++j) mix[j] = rng.small_complex(3);
      xs.push_back(mix);
      for (const CVec& x : xs) {
        LinearOperator s = p.r(x) + p.rstar(x), acc = LinearOperator::identity(n);
        for (std::size_t k = 0; k < power; ++k) acc = acc * s;
        c.expect(acc.is_zero(), name + ": (b) (R_x + R*_x)^{2n} != 0");
      }
    });

    // (c) flatness.
    c.guard(name + " c", [&] {
      bool flat = is_flat(p);
      c.expect(flat == rep.riemann.is_zero(), name + ": (c) is_flat vs Riemann = 0");
      c.expect(flat == rep.flat, name + ": (c) is_flat vs report");
      const FlatEquivalence& f = rep.c;
      c.expect(f.c1 == flat, name + ": (c) report c1 vs is_flat");
      if (f.c1) c.expect(f.c2 == f.c3, name + ": (c) c1 holds but c2 != c3");
      if (f.c2) c.expect(f.c1 == f.c3, name + ": (c) c2 holds but c1 != c3");
      if (f.c3) c.expect(f.c1 == f.c2, name + ": (c) c3 holds but c1 != c2");
      if (is_two_step_pair(p)) {
        ++two_step;
        auto crit = two_step_flat_criterion(p);
        c.expect(crit.has_value(), name + ": (c) two-step criterion not applicable");
        c.expect(crit == flat, name + ": (c) two-step: flat vs H(U^2, U^2) = 0");
        c.expect(is_novikov(p) == flat, name + ": (c) two-step: flat vs Novikov");
      }
    });

    // (d) annihilator identities.
    c.guard(name + " d", [&] {
      CSubspace ann = annihilator(p.algebra());
      bool in_ann = true;
      for (std::size_t x = 0; x < n && in_ann; ++x)
        for (std::size_t z = 0; z < n && in_ann; ++z) {
          LinearOperator op = p.rstar(x) * p.r(z) - p.r(z) * p.rstar(x);
          for (std::size_t y = 0; y < n; ++y) in_ann = in_ann && ann.contains(op(th::e(n, y)));
        }
      c.expect(in_ann, name + ": (d) (R*_x R_z - R_z R*_x) y outside ann(U)");
      c.expect(rstar_span(p) == orthogonal_complement(p.form(), ann), name + ": (d) R*_U U != ann^perp");
      if (ann.is_zero()) {
        c.expect(power_ideal(p.algebra(), 2).dim() == n, name + ": (d) ann = 0 but U^2 != U");
        c.expect(rstar_span(p).dim() == n, name + ": (d) ann = 0 but R*_U U != U");
      }
    });

    // (e) round trips.
    c.guard(name + " e", [&] {
      PairFromPK back = pair_from_pk(l);
      c.expect(verify_isomorphism(l, build_lie(back.pair), back.iso).ok(), name + ": (e) pair_from_pk iso");
      c.expect(transform_pair(back.pair, complex_part(back.iso, n)) == p, name + ": (e) pair_from_pk o build_lie");

      mine.aff = detect_aff(p);
      if (const auto& f = mine.aff) {
        ++aff_type;
        c.expect(verify_isomorphism(standard_pk(f->S), l, f->iso).ok(), name + ": (e) detect_aff iso");
        ComplexifiedPair cp = complexify_pair(f->S);
        auto g = detect_aff(cp.pair);
        c.expect(g.has_value(), name + ": (e) detect_aff fails on complexify_pair(S)");
        if (g)
          c.expect(verify_isomorphism(standard_pk(f->S), standard_pk(g->S), inverse(g->iso) * cp.iso).ok(),
                   name + ": (e) detect_aff o complexify_pair does not recover S");
      }

      mine.tower = tower(p);
      const Tower& t = *mine.tower;
      c.expect(!t.diagnostic.has_value(), name + ": (e) tower stopped: " + t.diagnostic.value_or(""));
      c.expect(!find_reduction_vector(t.base).has_value(), name + ": (e) tower base is reducible");
      if (!t.steps.empty()) ++reducible;
      const APKPair* source = &p;
      for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const Reduction& r = t.steps[k];
        const std::string at = name + " step " + std::to_string(k);
        APKPair up = double_extend(r.reduced, r.data);
        c.expect(up == transform_pair(*source, r.cert.basis_change), at + ": (e) double_extend o reduce");
        Reduction again = reduce_at(up, th::e(up.dim(), up.dim() - 1));
        c.expect(again.reduced == r.reduced && again.data == r.data, at + ": (e) reduce o double_extend");
        // (f) on the recovered data.
        c.expect(check_apk(up.algebra(), up.form()).ok(), at + ": (f) extension not APK");
        Signature s = signature(up.form()), s1 = signature(r.reduced.form());
        c.expect(s == Signature{s1.positive + 1, s1.negative + 1}, at + ": (f) signature step");
        source = &r.reduced;
      }
    });

    // (f) extensions of every pair by simple data.
    c.guard(name + " f", [&] {
      DoubleExtensionData d = DoubleExtensionData::trivial(n, rng.small_complex(2), rng.small_complex(2));
      c.expect(validate_extension_data(p, d).ok(), name + ": (f) trivial data rejected");
      APKPair up = double_extend(p, d);
      c.expect(check_apk(up.algebra(), up.form()).ok(), name + ": (f) extension not APK");
      Signature s = signature(up.form()), s1 = signature(p.form());
      c.expect(s == Signature{s1.positive + 1, s1.negative + 1}, name + ": (f) signature step");
    });
  }

  // (a), negative side: perturbed Grams.
  std::size_t invalid = 0;
  for (const auto& [u, g] : perturbed(corpus)) {
    c.guard("perturbed", [&] {
      bool apk = check_apk(u, HermitianGram(g)).ok();
      if (!apk) ++invalid;
      c.expect(apk == validate_pk(oracle::lie_from_raw(u, g)).ok(),
               "perturbed pair: (a) APK certificate disagrees with Lie invariants");
    });
  }
  c.expect(invalid >= 10, "too few invalid perturbed pairs");
  c.expect(reducible >= 20 && two_step >= 10 && aff_type >= 20 && nilpotent >= 20, "corpus coverage too thin");
  c.note(std::to_string(reducible) + " reducible, " + std::to_string(two_step) + " two-step, " +
         std::to_string(aff_type) + " aff-type, " + std::to_string(nilpotent) + " nilpotent, " +
         std::to_string(invalid) + " invalid perturbations");
}

// B(a, b) = gamma * trace_R(R_ab) on the recovered real algebra.
void check_einstein(Criterion& c, const std::string& name, const std::optional<AffForm>& f, const Rational& gamma) {
  c.expect(f.has_value(), name + ": detect_aff failed");
  if (!f) return;
  const RealAlgebra& a = f->S.algebra();
  const std::size_t d = a.dim();
  bool ok = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RVec ab = a.product(th::re(d, i), th::re(d, j));
      ok = ok && f->S.form()(i, j) == gamma * a.right_mult_matrix(ab).trace();
    }
  c.expect(ok, name + ": B != gamma trace(R_ab)");
}

void criterion4(Criterion& c, const std::vector<Entry>& corpus, const std::vector<Computed>& computed) {
  std::size_t found = 0;
  const std::array<Rational, 3> betas = {Rational(1), Rational(-3, 2), Rational(2, 5)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t copies = 1 + seed % 3;
    const Rational& beta = betas[seed % 3];
    const std::string name = "einstein/s" + std::to_string(seed);
    c.guard(name, [&] {
      APKPair p = corpus::einstein(seed, copies, beta);
      auto gamma = einstein_check(p);
      c.expect(gamma == beta, name + ": einstein factor differs from beta");
      if (!gamma) return;
      ++found;
      check_einstein(c, name, detect_aff(p), *gamma);
    });
  }
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Computed& got = computed[k];
    c.expect(got.report.has_value(), corpus[k].name + ": no curvature report");
    if (got.report && got.report->einstein_factor) {
      ++found;
      check_einstein(c, corpus[k].name, got.aff, *got.report->einstein_factor);
    }
  }
  c.expect(found >= 3, "fewer than 3 Einstein pairs");
  c.note(std::to_string(found) + " Einstein pairs");
}

void criterion5(Criterion& c) {
  std::size_t count = 0;
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    const std::size_t unital = 1 + seed % 4, abelian = (seed / 4) % 3;
    const std::string name = "definite/s" + std::to_string(seed);
    c.guard(name, [&] {
      APKPair p = corpus::positive_definite(seed, unital, abelian);
      LieRealization l = build_lie(p);
      c.expect(signature(p.form()) == Signature{p.dim(), 0}, name + ": H not positive definite");
      bool definite = true;
      for (std::size_t k = 1; k <= l.dim(); ++k) {
        RMatrix minor(k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t s = 0; s < k; ++s) minor(r, s) = l.gmat(r, s);
        definite = definite && determinant(minor) > 0;
      }
      c.expect(definite, name + ": g not positive definite");
      auto f = detect_aff(p);
      c.expect(f.has_value(), name + ": detect_aff failed");
      if (!f) return;
      auto units = split_units(f->S);
      c.expect(units.has_value(), name + ": split_units failed");
      if (!units) return;
      c.expect(units->size() == unital, name + ": wrong number of unital ideals");
      c.expect(verify_unital_decomposition(f->S, *units).ok(), name + ": unital decomposition rejected");
      for (const RVec& u : *units)
        c.expect(rank(f->S.algebra().right_mult_matrix(u)) == 1, name + ": unital ideal not 1-dimensional");
      ++count;
    });
  }
  c.expect(count >= 20, "fewer than 20 positive-definite pairs");
  c.note(std::to_string(count) + " positive-definite pairs");
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
  int status = pclose(f);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

// Canonical text of what the suite computed for one pair.
std::string digest(const APKPair& p, const CurvatureReport& r, const Tower& t, const std::optional<AffForm>& f) {
  std::string s = emit_document(to_doc(p));
  s += dump(json_matrix(r.ricci));
  for (std::size_t a = 0; a < r.riemann.dim(); ++a)
    for (std::size_t b = a + 1; b < r.riemann.dim(); ++b) s += dump(json_matrix(r.riemann.at(a, b)));
  s += r.flat ? "F" : "f";
  s += r.einstein_factor ? to_string(*r.einstein_factor) : "-";
  s += std::to_string(t.steps.size()) + emit_document(to_doc(t.base));
  for (const Reduction& step : t.steps) s += emit_document(ExtensionDoc{step.data});
  if (f) s += emit_document(to_doc(f->S));
  return s;
}

std::string digest(const Computed& c, const APKPair& p) {
  if (!c.report || !c.tower) return {};
  return digest(p, *c.report, *c.tower, c.aff);
}

void criterion6(Criterion& c, const std::vector<Entry>& corpus, const std::vector<Computed>& computed) {
  const std::string cli = PKLA_CLI;
  for (const char* kind : {"tstar", "tower", "abelian"})
    for (const char* dim : {"3", "7"}) {
      std::string cmd = "\"" + cli + "\" generate --seed 42 --dim " + dim + " --kind " + kind;
      std::string a = run(cmd), b = run(cmd);
      c.expect(!a.empty() && a.find("<exit") == std::string::npos, cmd + ": failed");
      c.expect(a == b, cmd + ": outputs differ");
    }

  std::vector<Entry> again = build_corpus();
  c.expect(again.size() == corpus.size(), "corpus size changed on regeneration");
  std::size_t compared = 0;
  for (std::size_t k = 0; k < again.size() && k < corpus.size(); ++k) {
    c.expect(again[k].name == corpus[k].name && again[k].pair == corpus[k].pair,
             again[k].name + ": regenerated pair differs");
    const APKPair& p = again[k].pair;
    c.guard(again[k].name, [&] {
      std::string before = digest(computed[k], corpus[k].pair);
      c.expect(!before.empty(), again[k].name + ": nothing recorded on the first pass");
      c.expect(digest(p, curvature_report(p), tower(p), detect_aff(p)) == before,
               again[k].name + ": report differs on rerun");
      ++compared;
    });
  }
  c.note(std::to_string(compared) + " reports recomputed");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Entry> corpus = build_corpus();
  std::cout << "corpus: " << corpus.size() << " generated pairs, complex dims 1-8\n";

  std::vector<Criterion> all;
  auto timed = [&](Criterion c, const std::function<void(Criterion&)>& body) {
    auto t0 = clock::now();
    body(c);
    std::cout << c.line(std::chrono::duration<double>(clock::now() - t0).count()) << std::endl;
    all.push_back(std::move(c));
  };

  timed(Criterion(1, "paper-example regressions"), criterion1);
  timed(Criterion(2, "curvature route agreement"), [&](Criterion& c) { criterion2(c, corpus); });
  std::vector<Computed> computed(corpus.size());
  timed(Criterion(3, "theorem property suites"), [&](Criterion& c) { criterion3(c, corpus, computed); });
  timed(Criterion(4, "Einstein structures"), [&](Criterion& c) { criterion4(c, corpus, computed); });
  timed(Criterion(5, "positive-definite metrics"), criterion5);
  // The whole corpus is regenerated and every report recomputed from scratch.
  timed(Criterion(6, "determinism"), [&](Criterion& c) { criterion6(c, corpus, computed); });

  bool ok = true;
  for (const auto& c : all) ok = ok && c.passed();
  std::cout << (ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
  return ok ? 0 : 1;
}
