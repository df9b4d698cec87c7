#include "suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "kml/errors.hpp"
#include "kml/random.hpp"

namespace kml::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string padded(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return buf;
}

/// Runs `body`, timing it. A library error inside a generated instance is a
/// failed check carrying the error as its witness.
CheckResult timed(std::string id, Json parameters, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.id = std::move(id);
  c.parameters = std::move(parameters);
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    c.verdict = Verdict::Fail;
    c.witness = Json{{"error", e.code()}, {"message", e.what()}};
  }
  c.wallMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return c;
}

Verdict verdictOf(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

Json optionalJson(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<std::size_t> grid(const std::optional<std::size_t>& fixed, std::size_t lo, std::size_t hi) {
  if (fixed) return {*fixed};
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Json presentationList(const std::vector<ModulePresentation>& ps, const Ring& ring) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.toString(ring.name()));
  return out;
}

Json k0List(const std::vector<K0Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.toString());
  return out;
}

Report suitePn(const SuiteOptions& opt) {
  Report r;
  for (std::size_t n : grid(opt.n, 0, 4)) {
    const std::size_t d = opt.truncation.value_or(std::max<std::size_t>(20, 4 * (n + 1)));
    if (d < 4 * (n + 1)) throw UsageError("pn: truncation must be at least " + std::to_string(4 * (n + 1)));
    r.add(timed("pn/n=" + std::to_string(n), {{"n", n}, {"truncation", d}}, [&](CheckResult& c) {
      const ProjectiveSpaceReport p = projectiveSpaceDecomposition(n, d);
      c.window = d;
      c.verdict = verdictOf(p.pass());
      c.witness = {{"injective", p.injective},
                   {"cokernel", toJson(p.cokernel, Ring::integers())},
                   {"cokernel_rank", p.cokernel.freeRank},
                   {"classes", k0List(p.classes)},
                   {"basis_determinant", toJson(p.basisDeterminant)},
                   {"connecting_map_vanishes", p.connectingMapVanishes}};
    }));
  }
  return r;
}

Report suiteSplit(const SuiteOptions& opt) {
  Report r;
  const std::size_t d = opt.truncation.value_or(12);
  for (std::size_t dim : grid(opt.dim, 1, 3))
    for (std::size_t n : grid(opt.n, 0, 2)) {
      if (d < 3 * (n + 1)) throw UsageError("split: truncation must be at least " + std::to_string(3 * (n + 1)));
      const std::string id = "split/dim=" + std::to_string(dim) + ",n=" + std::to_string(n);
      r.add(timed(id, {{"dim", dim}, {"n", n}, {"truncation", d}, {"base", opt.base.name()}}, [&](CheckResult& c) {
        const SplitReport s = splitSequenceVerify(dim, n, d, opt.base);
        c.window = s.safeWindow;
        c.verdict = verdictOf(s.pass());
        c.witness = {{"injective", s.injective},
                     {"cokernel", toJson(s.cokernel, opt.base)},
                     {"expected_rank", (n + 1) * dim},
                     {"retraction", s.retraction},
                     {"section", s.section},
                     {"splitting", s.splitting}};
        if (!s.pass()) c.witness["q"] = toJson(s.q);
      }));
    }
  return r;
}

void fillOneMinusS(CheckResult& c, const GradedModule& x) {
  const OneMinusSReport s = verifyOneMinusS(x);
  c.window = s.window;
  c.verdict = verdictOf(s.pass());
  c.witness = {{"exact", s.exact},
               {"failing_degree", optionalJson(s.failingDegree)},
               {"class_extended", s.lhs.toString()},
               {"one_minus_s_class", s.rhs.toString()}};
}

Report suiteOneMinusS(const SuiteOptions& opt) {
  Report r;
  if (!opt.moduleFile.empty()) {
    const GradedModule x = gradedFromJson(loadJsonFile(opt.moduleFile), opt.base);
    r.add(timed("one-minus-s/input", {{"module", opt.moduleFile}}, [&](CheckResult& c) { fillOneMinusS(c, x); }));
    return r;
  }
  InstanceGenerator gen(opt.seed);
  const std::size_t d = opt.truncation.value_or(9);
  for (std::size_t i = 0; i < opt.count.value_or(50); ++i) {
    const auto vars = static_cast<std::size_t>(gen.uniform(1, 2));
    const auto bound = static_cast<std::size_t>(gen.uniform(1, 5));
    if (d < bound + vars + 1) throw UsageError("one-minus-s: truncation too small for the generated supports");
    const GradedModule x = gen.nilModule(opt.base, vars, bound, d);
    r.add(timed("one-minus-s/random-" + padded(i), {{"vars", vars}, {"support_below", bound}, {"truncation", d}},
                [&](CheckResult& c) { fillOneMinusS(c, x); }));
  }
  return r;
}

void fillAdams(CheckResult& c, std::size_t p, unsigned k) {
  const AdamsReport a = verifyAdamsKoszul(p, k);
  mpz_class expected = 1;
  for (std::size_t i = 0; i < p; ++i) expected *= k;
  c.verdict = verdictOf(a.pass());
  c.witness = {{"psi_k_kos", a.lhs.toString()},
               {"kos_times_cofactor", a.rhs.toString()},
               {"cofactor", cofactor(p, k).toString()},
               {"cofactor_at_one", toJson(a.cofactorAtOne)},
               {"k_pow_p", toJson(expected)},
               {"factorization", a.factorization},
               {"evaluation", a.evaluation}};
}

Report suiteAdams(const SuiteOptions& opt) {
  Report r;
  if (opt.k && *opt.k == 0) throw UsageError("adams: k must be at least 1");
  if (opt.p && *opt.p == 0) throw UsageError("adams: p must be at least 1");
  for (std::size_t p : grid(opt.p, 1, 4))
    for (std::size_t k : grid(opt.k, 1, 5))
      r.add(timed("adams/p=" + std::to_string(p) + ",k=" + std::to_string(k), {{"p", p}, {"k", k}},
                  [&](CheckResult& c) { fillAdams(c, p, static_cast<unsigned>(k)); }));
  if (opt.p || opt.k) return r;
  InstanceGenerator gen(opt.seed);
  for (std::size_t i = 0; i < opt.count.value_or(100); ++i) {
    const auto vars = static_cast<std::size_t>(gen.uniform(1, 3));
    const LaurentPolynomial f = gen.laurent(vars, static_cast<std::size_t>(gen.uniform(1, 4)));
    const auto k = static_cast<unsigned>(gen.uniform(1, 4));
    const auto m = static_cast<unsigned>(gen.uniform(1, 4));
    r.add(timed("adams/composition-" + padded(i), {{"k", k}, {"m", m}, {"f", f.toString()}}, [&](CheckResult& c) {
      const LaurentPolynomial lhs = adams(k, adams(m, f));
      const LaurentPolynomial rhs = adams(k * m, f);
      c.verdict = verdictOf(lhs == rhs);
      c.witness = {{"psi_k_psi_m", lhs.toString()}, {"psi_km", rhs.toString()}};
    }));
  }
  return r;
}

void fillArtinRees(CheckResult& c, const AffineObject& x, const Submodule& y, std::size_t window) {
  const ArtinReesReport a = artinReesIndex(x, y, {}, window);
  c.window = window;
  c.verdict = a.n0 ? Verdict::Pass : Verdict::NonVerdict;
  c.witness = {{"n0", optionalJson(a.n0)}, {"submodule", toJson(y)}};
}

Report suiteArtinRees(const SuiteOptions& opt) {
  Report r;
  const std::size_t window = opt.truncation.value_or(12);
  if (!opt.objectFile.empty()) {
    const AffineObject x = affineFromJson(loadJsonFile(opt.objectFile), opt.base);
    if (opt.submoduleFile.empty()) throw UsageError("artin-rees: --object needs --submodule");
    const Submodule y = imageOf(matrixFromJson(loadJsonFile(opt.submoduleFile), x.ring(), "",
                                               static_cast<long>(x.generatorCount())));
    r.add(timed("artin-rees/input", {{"object", opt.objectFile}, {"submodule", opt.submoduleFile}},
                [&](CheckResult& c) { fillArtinRees(c, x, y, window); }));
    return r;
  }
  const Ring z = Ring::integers();
  r.add(timed("artin-rees/example-times-4", {{"module", "Z"}, {"endo", "4"}, {"submodule", "2Z"}}, [&](CheckResult& c) {
    const AffineObject x = AffineObject::free(z, 1, {Matrix::fromRows(z, {{4}})});
    fillArtinRees(c, x, imageOf(Matrix::fromRows(z, {{2}})), window);
    c.witness["expected_n0"] = 1;
    if (c.witness["n0"] != 1) c.verdict = Verdict::Fail;
  }));
  InstanceGenerator gen(opt.seed);
  for (std::size_t i = 0; i < opt.count.value_or(100); ++i) {
    const AffineObject x = gen.affine(3, 2);
    const Submodule y = gen.stableSubmodule(x, static_cast<std::size_t>(gen.uniform(1, 2)));
    Json endos = Json::array();
    for (const auto& e : x.endos()) endos.push_back(toJson(e));
    r.add(timed("artin-rees/random-" + padded(i), {{"rank", x.generatorCount()}, {"endos", endos}},
                [&](CheckResult& c) { fillArtinRees(c, x, y, window); }));
  }
  return r;
}

void fillStability(CheckResult& c, const FFiltration& fil, bool requireStable) {
  const StabilityReport s = stabilityIndex(fil);
  c.window = s.window;
  c.witness = {{"stable_from", optionalJson(s.stableFrom)},
               {"generated_from", optionalJson(s.generatedFrom)},
               {"conditions_agree", s.crossCheck}};
  if (!s.crossCheck)
    c.verdict = Verdict::Fail;
  else
    c.verdict = !requireStable || s.stableFrom ? Verdict::Pass : Verdict::NonVerdict;
}

Report suiteStability(const SuiteOptions& opt) {
  Report r;
  const std::size_t depth = opt.truncation.value_or(10);
  if (!opt.objectFile.empty()) {
    const AffineObject x = affineFromJson(loadJsonFile(opt.objectFile), opt.base);
    if (opt.filtrationFile.empty()) throw UsageError("stability: --object needs --filtration");
    const FFiltration fil = filtrationFromJson(loadJsonFile(opt.filtrationFile), x);
    r.add(timed("stability/input", {{"object", opt.objectFile}, {"filtration", opt.filtrationFile}},
                [&](CheckResult& c) { fillStability(c, fil, true); }));
    return r;
  }
  const Ring z = Ring::integers();
  const AffineObject twice = AffineObject::free(z, 1, {Matrix::fromRows(z, {{2}})});
  r.add(timed("stability/example-constant", {{"module", "Z"}, {"endo", "2"}, {"steps", "x_n = Z"}},
              [&](CheckResult& c) {
                FFiltration fil{twice, {}, std::vector<Submodule>(depth + 1, Submodule::full(z, 1))};
                fillStability(c, fil, false);
                c.witness["expected"] = "unstable";
                if (!c.witness["stable_from"].is_null()) c.verdict = Verdict::Fail;
              }));
  r.add(timed("stability/example-adic", {{"module", "Z"}, {"endo", "2"}, {"steps", "x_n = 2^n Z"}},
              [&](CheckResult& c) {
                fillStability(c, adicFiltration(twice, {}, depth), false);
                c.witness["expected"] = "stable from 0";
                if (c.witness["stable_from"] != 0) c.verdict = Verdict::Fail;
              }));
  InstanceGenerator gen(opt.seed);
  for (std::size_t i = 0; i < opt.count.value_or(100); ++i) {
    const AffineObject x = gen.affine(3, 2);
    const FFiltration fil = gen.filtration(x, depth);
    r.add(timed("stability/random-" + padded(i), {{"rank", x.generatorCount()}, {"endos", x.endos().size()}},
                [&](CheckResult& c) { fillStability(c, fil, false); }));
  }
  return r;
}

void fillDevissage(CheckResult& c, const AffineObject& x) {
  const DevissageReport d = verifyDevissage(x, {});
  c.verdict = verdictOf(d.pass());
  c.witness = {{"length", d.length()},
               {"nil_index", d.nilIndex},
               {"endpoints", d.endpoints},
               {"decreasing", d.decreasing},
               {"annihilated", d.annihilated},
               {"failing_step", optionalJson(d.failingStep)}};
}

Report suiteDevissage(const SuiteOptions& opt) {
  Report r;
  if (!opt.objectFile.empty()) {
    const AffineObject x = affineFromJson(loadJsonFile(opt.objectFile), opt.base);
    r.add(timed("devissage/input", {{"object", opt.objectFile}}, [&](CheckResult& c) { fillDevissage(c, x); }));
    return r;
  }
  InstanceGenerator gen(opt.seed);
  for (std::size_t i = 0; i < opt.count.value_or(100); ++i) {
    const AffineObject x = gen.nilpotentAffine(opt.base, 4, 2);
    r.add(timed("devissage/random-" + padded(i),
                {{"module", x.module().presentation().toString(x.ring().name())}, {"endos", x.endos().size()}},
                [&](CheckResult& c) { fillDevissage(c, x); }));
  }
  return r;
}

Report suiteGrF1(const SuiteOptions& opt) {
  Report r;
  InstanceGenerator gen(opt.seed);
  const std::size_t d = opt.truncation.value_or(8);
  for (std::size_t i = 0; i < opt.count.value_or(100); ++i) {
    const auto vars = opt.n.value_or(static_cast<std::size_t>(gen.uniform(1, 2)));
    std::vector<Module> parts = gen.parts(opt.base, static_cast<std::size_t>(gen.uniform(1, 3)), 2);
    if (d < parts.size() + vars) throw UsageError("grf1: truncation too small");
    Json ranks = Json::array();
    for (const auto& m : parts) ranks.push_back(m.rank());
    r.add(timed("grf1/random-" + padded(i), {{"vars", vars}, {"part_ranks", ranks}, {"truncation", d}},
                [&](CheckResult& c) {
                  const GrF1Report g = verifyGrF1(parts, vars, d);
                  c.window = d;
                  c.verdict = verdictOf(g.pass());
                  c.witness = {{"b_a_parts", presentationList(g.roundTrip, opt.base)},
                               {"dims_ab", g.dimsAB},
                               {"dims_filtration", g.dimsFiltration},
                               {"ba_is_identity", g.baIsIdentity},
                               {"ab_matches_filtration", g.abMatchesFiltration}};
                }));
  }
  return r;
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table{
      {"pn", suitePn},           {"split", suiteSplit},         {"one-minus-s", suiteOneMinusS},
      {"adams", suiteAdams},     {"artin-rees", suiteArtinRees}, {"stability", suiteStability},
      {"devissage", suiteDevissage}, {"grf1", suiteGrF1}};
  return table;
}

Report computeHomology(const SuiteOptions& opt) {
  if (opt.cubeFile.empty()) throw UsageError("homology: --cube is required");
  const SCube cube = cubeFromJson(loadJsonFile(opt.cubeFile), opt.base);
  std::vector<std::size_t> order;
  if (!opt.order.empty()) {
    if (opt.order.size() != cube.dimension()) throw UsageError("homology: --order must list every direction once");
    order.assign(cube.dimension(), 0);
    std::vector<bool> used(cube.dimension(), false);
    for (std::size_t pos = 0; pos < opt.order.size(); ++pos) {
      std::size_t i = 0;
      try {
        i = cube.directionIndex(opt.order[pos]);
      } catch (const UnknownDirection&) {
        throw UsageError("homology: unknown direction " + opt.order[pos]);
      }
      if (used[i]) throw UsageError("homology: direction listed twice in --order");
      used[i] = true;
      order[i] = pos;
    }
  }
  Report r;
  const ChainComplex tot = totalComplex(cube, order, false);
  r.add(timed("homology/complex", {{"cube", opt.cubeFile}}, [&](CheckResult& c) {
    c.verdict = verdictOf(tot.isComplex());
    Json ranks = Json::array();
    for (const auto& m : tot.modules) ranks.push_back(m.generatorCount());
    c.witness = {{"d_squared_zero", c.verdict == Verdict::Pass}, {"chain_ranks", ranks}, {"admissible", isAdmissible(cube)}};
  }));
  for (std::size_t k = 0; k <= tot.length(); ++k)
    r.add(timed("homology/H" + std::to_string(k), {{"degree", k}}, [&](CheckResult& c) {
      const ModulePresentation h = tot.homology(k);
      c.witness = toJson(h, cube.ring());
    }));
  return r;
}

Report computeKoszul(const SuiteOptions& opt) {
  if (opt.moduleFile.empty()) throw UsageError("koszul: --module is required");
  const GradedModule x = gradedFromJson(loadJsonFile(opt.moduleFile), opt.base);
  if (x.truncation() < x.vars()) throw UsageError("koszul: truncation must be at least the number of variables");
  Report r;
  const KoszulHomology h = koszulHomology(x);
  for (std::size_t i = 0; i < h.t.size(); ++i)
    r.add(timed("koszul/T" + std::to_string(i), {{"i", i}}, [&](CheckResult& c) {
      c.window = h.window;
      c.witness = {{"by_degree", presentationList(h.t[i], x.ring())}, {"vanishes", h.vanishes(i)}};
    }));
  return r;
}

Report computeK0Class(const SuiteOptions& opt) {
  if (opt.moduleFile.empty()) throw UsageError("k0-class: --module is required");
  const GradedModule x = gradedFromJson(loadJsonFile(opt.moduleFile), opt.base);
  if (x.truncation() < x.vars()) throw UsageError("k0-class: truncation must be at least the number of variables");
  Report r;
  r.add(timed("k0-class/class", {{"module", opt.moduleFile}}, [&](CheckResult& c) {
    const K0Vector v = k0Class(x);
    c.window = v.window;
    c.witness = toJson(v);
  }));
  return r;
}

Report computeSnf(const SuiteOptions& opt) {
  if (opt.matrixFile.empty()) throw UsageError("snf: --matrix is required");
  const Json doc = loadJsonFile(opt.matrixFile);
  const Ring ring = doc.is_object() && doc.contains("ring") ? ringFromJson(doc, "") : opt.base;
  const Matrix a = matrixFromJson(doc, ring, "");
  Report r;
  r.add(timed("snf/decomposition", {{"rows", a.rows()}, {"cols", a.cols()}}, [&](CheckResult& c) {
    const SmithDecomposition s = smithNormalForm(a);
    const bool ok = s.u * a * s.v == s.d;
    Json diag = Json::array();
    for (const auto& e : s.diagonal()) diag.push_back(toJson(e));
    c.verdict = verdictOf(ok);
    c.witness = {{"diagonal", diag}, {"rank", s.rank}, {"u", toJson(s.u)}, {"v", toJson(s.v)},
                 {"uav_equals_d", ok}, {"cokernel", toJson(cokernel(a), ring)}};
  }));
  return r;
}

}  // namespace

const std::vector<std::string>& verifySuiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

Report runVerify(const std::string& suite, const SuiteOptions& opt) {
  Report r;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) r.append(fn(opt));
  } else {
    auto it = suites().find(suite);
    if (it == suites().end()) throw UsageError("unknown suite " + suite);
    r = it->second(opt);
  }
  r.suite = suite;
  r.seed = opt.seed;
  r.finalize();
  return r;
}

Report runCompute(const std::string& command, const SuiteOptions& opt) {
  static const std::map<std::string, SuiteFn> table{
      {"homology", computeHomology}, {"koszul", computeKoszul}, {"k0-class", computeK0Class}, {"snf", computeSnf}};
  auto it = table.find(command);
  if (it == table.end()) throw UsageError("unknown command " + command);
  Report r = it->second(opt);
  r.suite = command;
  r.seed = opt.seed;
  r.finalize();
  return r;
}

}  // namespace kml::cli
