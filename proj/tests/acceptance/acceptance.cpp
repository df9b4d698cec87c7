// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kml/errors.hpp"
#include "kml/random.hpp"

using namespace kml;

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool runCriterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("%-5s %s  %s  (%.0f ms)%s%s\n", id, o.ok ? "PASS" : "FAIL", title, msSince(start),
              o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

const Ring Z = Ring::integers();

std::string str(std::size_t v) { return std::to_string(v); }

void ac1(Outcome& o) {
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t dim = 1; dim <= 4; ++dim)
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto start = Clock::now();
        const KoszulHomology h = koszulHomology(freeGraded(Module::free(Z, dim), n, k, 10));
        const std::string where = "n=" + str(n) + " dim=" + str(dim) + " k=" + str(k);
        for (std::size_t i = 1; i <= n; ++i) o.require(h.vanishes(i), "T_" + str(i) + " nonzero at " + where);
        for (std::size_t d = 0; d <= h.window; ++d) {
          const ModulePresentation& t0 = h.t[0][d];
          const bool expected = d == k ? t0.freeRank == dim && t0.invariantFactors.empty() : t0.isZero();
          o.require(expected, "T_0 wrong in degree " + str(d) + " at " + where);
        }
        const double ms = msSince(start);
        worst = std::max(worst, ms);
        o.require(ms < 1000, "instance over 1 s at " + where);
      }
  if (o.ok) o.detail = "48 instances, slowest " + std::to_string(static_cast<int>(worst)) + " ms";
}

void ac2(Outcome& o) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto start = Clock::now();
    const ProjectiveSpaceReport r = projectiveSpaceDecomposition(n, 20);
    o.require(r.cokernel.freeRank == n + 1 && r.cokernel.invariantFactors.empty(), "cokernel not Z^" + str(n + 1));
    o.require(r.pass(), "classes s^0..s^" + str(n) + " not a basis");
    o.require(msSince(start) < 1000, "n=" + str(n) + " over 1 s");
  }
}

void ac3(Outcome& o) {
  for (std::size_t dim = 1; dim <= 3; ++dim)
    for (std::size_t n = 0; n <= 2; ++n) {
      const SplitReport r = splitSequenceVerify(dim, n, 12);
      const std::string where = " at dim=" + str(dim) + " n=" + str(n);
      o.require(r.injective, "not injective" + where);
      o.require(r.cokernel.freeRank == (n + 1) * dim && r.cokernel.invariantFactors.empty(), "cokernel rank" + where);
      o.require(r.retraction && r.section && r.splitting, "no splitting" + where);
    }
}

void ac4(Outcome& o) {
  const auto start = Clock::now();
  for (std::size_t p = 1; p <= 4; ++p)
    for (unsigned k = 1; k <= 5; ++k) {
      const AdamsReport r = verifyAdamsKoszul(p, k);
      o.require(r.factorization, "factorization fails at p=" + str(p) + " k=" + str(k));
      o.require(r.evaluation, "cofactor(1..1) != k^p at p=" + str(p) + " k=" + str(k));
    }
  InstanceGenerator gen(404);
  for (int i = 0; i < 100; ++i) {
    const LaurentPolynomial f = gen.laurent(static_cast<std::size_t>(gen.uniform(1, 3)), static_cast<std::size_t>(gen.uniform(1, 4)));
    const auto k = static_cast<unsigned>(gen.uniform(1, 5));
    const auto m = static_cast<unsigned>(gen.uniform(1, 5));
    o.require(adams(k, adams(m, f)) == adams(k * m, f), "composition fails on " + f.toString());
  }
  o.require(msSince(start) < 1000, "over 1 s total");
}

void ac5(Outcome& o) {
  InstanceGenerator gen(505);
  for (int i = 0; i < 50; ++i) {
    const auto vars = static_cast<std::size_t>(gen.uniform(0, 2));
    const auto bound = static_cast<std::size_t>(gen.uniform(1, 5));
    const GradedModule x = gen.nilModule(Z, vars, bound, 9);
    const OneMinusSReport r = verifyOneMinusS(x);
    o.require(r.exact, "sequence not exact, instance " + std::to_string(i));
    o.require(K0Vector::agree(r.lhs, r.rhs), "instance " + std::to_string(i) + ": " + r.lhs.toString() + " vs " + r.rhs.toString());
  }
}

void ac6(Outcome& o) {
  InstanceGenerator gen(606);
  for (int i = 0; i < 200; ++i) {
    const auto vars = static_cast<std::size_t>(gen.uniform(1, 2));
    const SesWitness w = gen.ses(Z, vars, 7);
    const AdditivityReport r = checkAdditivity(w);
    o.require(r.pass(), "classes do not add, instance " + std::to_string(i));
    o.require(K0Vector::agree(k0Class(twist(w.mid, -1)), r.mid.shifted()),
              "twist(-1) is not s * class, instance " + std::to_string(i));
  }
}

void ac7(Outcome& o) {
  InstanceGenerator gen(707);
  for (int i = 0; i < 100; ++i) {
    const auto parts = gen.parts(Z, static_cast<std::size_t>(gen.uniform(1, 4)), 3);
    const GrF1Report r = verifyGrF1(parts, static_cast<std::size_t>(gen.uniform(1, 2)), 8);
    o.require(r.baIsIdentity, "b(a(parts)) != parts, instance " + std::to_string(i));
    o.require(r.abMatchesFiltration, "a(b(x)) dims differ from filtration quotients, instance " + std::to_string(i));
  }
}

void ac8(Outcome& o) {
  const AffineObject four = AffineObject::free(Z, 1, {Matrix::fromRows(Z, {{4}})});
  const ArtinReesReport example = artinReesIndex(four, imageOf(Matrix::fromRows(Z, {{2}})), {}, 12);
  o.require(example.n0 == 1u, "worked example does not give n0 = 1");
  InstanceGenerator gen(808);
  std::size_t worst = 0;
  for (int i = 0; i < 100; ++i) {
    const AffineObject x = gen.affine(3, 2);
    const Submodule y = gen.stableSubmodule(x, static_cast<std::size_t>(gen.uniform(1, 2)));
    const ArtinReesReport r = artinReesIndex(x, y, {}, 12);
    o.require(r.n0.has_value() && *r.n0 <= 8, "no n0 <= 8, instance " + std::to_string(i));
    if (r.n0) worst = std::max(worst, *r.n0);
  }
  if (o.ok) o.detail = "largest n0 " + str(worst);
}

void ac9(Outcome& o) {
  const AffineObject two = AffineObject::free(Z, 1, {Matrix::fromRows(Z, {{2}})});
  const StabilityReport constant = stabilityIndex(FFiltration{two, {}, std::vector<Submodule>(13, Submodule::full(Z, 1))});
  o.require(!constant.stableFrom && !constant.generatedFrom, "constant filtration under x2 reported stable");
  InstanceGenerator gen(909);
  std::size_t stable = 0;
  for (int i = 0; i < 100; ++i) {
    const AffineObject x = gen.affine(3, 2);
    const StabilityReport r = stabilityIndex(gen.filtration(x, 10));
    o.require(r.crossCheck, "conditions (i) and (ii) disagree, instance " + std::to_string(i));
    stable += r.stableFrom ? 1 : 0;
  }
  if (o.ok) o.detail = str(stable) + "/100 stable within the window";
}

void ac10(Outcome& o) {
  InstanceGenerator gen(1010);
  for (int i = 0; i < 200; ++i) {
    const SCube c = gen.cube(static_cast<std::size_t>(gen.uniform(1, 4)));
    o.require(validateCube(c).valid(), "generated cube invalid");
    o.require(totalComplex(c).isComplex(), "d o d != 0, instance " + std::to_string(i));
  }
  for (int i = 0; i < 40; ++i) {
    const SCube c = gen.cube(static_cast<std::size_t>(gen.uniform(2, 3)));
    const auto& dirs = c.directions();
    for (std::size_t a = 0; a < dirs.size(); ++a)
      for (std::size_t b = a + 1; b < dirs.size(); ++b) {
        const SCube ab = iteratedH0(c, {dirs[a], dirs[b]});
        const SCube ba = iteratedH0(c, {dirs[b], dirs[a]});
        for (Subset s = 0; s <= ab.fullSet(); ++s)
          o.require(ab.vertex(s).presentation() == ba.vertex(s).presentation(), "iterated H0 depends on order");
      }
  }
  TypicalCubeSpec good{{2, 3}, 1, {1, 1}}, bad{{2, 2}, 1, {1, 1}};
  o.require(isAdmissible(typicalCube(good)), "(2,3) cube not admissible");
  o.require(!isAdmissible(typicalCube(bad)), "(2,2) cube admissible");
}

void ac11(Outcome& o) {
  InstanceGenerator gen(1111);
  for (int i = 0; i < 100; ++i) {
    const AffineObject x = gen.nilpotentAffine(i % 3 == 2 ? Ring::rationals() : Z, 4, 2);
    const DevissageReport r = verifyDevissage(x, {});
    o.require(r.endpoints && r.decreasing, "not a filtration of x, instance " + std::to_string(i));
    o.require(r.annihilated, "quotient not killed, instance " + std::to_string(i));
    o.require(r.length() <= r.nilIndex, "length exceeds nilpotency index, instance " + std::to_string(i));
  }
}

bool unimodular(const Matrix& m) { return abs(determinant(m)) == 1; }

void ac12(Outcome& o) {
  InstanceGenerator gen(1212);
  for (int i = 0; i < 500; ++i) {
    const Matrix a = gen.matrix(Z, static_cast<std::size_t>(gen.uniform(1, 5)), static_cast<std::size_t>(gen.uniform(1, 5)), 9);
    const SmithDecomposition s = smithNormalForm(a);
    o.require(s.u * a * s.v == s.d, "U A V != D for " + a.toString());
    o.require(unimodular(s.u) && unimodular(s.v), "transform not unimodular for " + a.toString());
    const auto diag = s.diagonal();
    for (std::size_t k = 0; k + 1 < diag.size(); ++k)
      o.require(mpz_divisible_p(diag[k + 1].get_mpz_t(), diag[k].get_mpz_t()) != 0, "divisibility chain broken for " + a.toString());
  }
}

}  // namespace

int main() {
  const auto start = Clock::now();
  bool ok = true;
  ok &= runCriterion("AC1", "Koszul 0-sphericity of free modules", ac1);
  ok &= runCriterion("AC2", "P^n decomposition shadow, n <= 4, D = 20", ac2);
  ok &= runCriterion("AC3", "split exactness of (1 - t)^{n+1}, dim <= 3, n <= 2, D = 12", ac3);
  ok &= runCriterion("AC4", "Adams identity on Koszul classes and composition law", ac4);
  ok &= runCriterion("AC5", "(1 - s) square on 50 random Nil objects", ac5);
  ok &= runCriterion("AC6", "K0 additivity and twist equivariance on 200 sequences", ac6);
  ok &= runCriterion("AC7", "b o a = id and a o b against filtration quotients", ac7);
  ok &= runCriterion("AC8", "Artin-Rees index on 100 random instances", ac8);
  ok &= runCriterion("AC9", "stability conditions agree on 100 random filtrations", ac9);
  ok &= runCriterion("AC10", "cube calculus soundness", ac10);
  ok &= runCriterion("AC11", "devissage filtrations of 100 nilpotent instances", ac11);
  ok &= runCriterion("AC12", "Smith decompositions of 500 random matrices", ac12);
  const double total = msSince(start);
  const bool fast = total < 60000;
  std::printf("%-5s %s  full acceptance run under 60 s  (%.0f ms)\n", "TIME", fast ? "PASS" : "FAIL", total);
  return ok && fast ? 0 : 1;
}
