// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/cli.hpp"
#include "qlsmodcat/deformation.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/filtration.hpp"
#include "qlsmodcat/generation.hpp"
#include "qlsmodcat/report.hpp"
#include "qlsmodcat/structure.hpp"
#include "unit/support.hpp"

using namespace qlsmodcat;
using testsupport::coordinate_datum;
namespace fs = std::filesystem;

namespace {

const std::vector<CycloNumber> kSample{CycloNumber(0L), CycloNumber(1L)};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::size_t law(const QlsDatum& d) {
  std::size_t n = static_cast<std::size_t>(d.group().order());
  for (int N : d.Ns()) n *= static_cast<std::size_t>(N);
  return n;
}

std::vector<QlsDatum> all_fixtures() {
  return {fixtures::sweedler(), fixtures::clifford(), fixtures::exterior_z2z2(), fixtures::z4_minus_one(),
          fixtures::z2z2_pair(), fixtures::z4_order_four()};
}

Outcome hopf_axioms() {
  Outcome o;
  for (const auto& orders : {std::vector<int>{2}, std::vector<int>{4}, std::vector<int>{2, 2}}) {
    const auto h = group_algebra(AbelianGroup(orders));
    o.require(verify_hopf_axioms(h).ok(), "k" + AbelianGroup(orders).to_string());
  }
  const auto check = [&](const HopfAlgebraRep& h, std::size_t dim, const std::string& name) {
    const auto r = verify_hopf_axioms(h);
    o.require(r.ok(), name + ": " + r.summary());
    o.require(h.dim() == dim, name + " dim " + std::to_string(h.dim()) + " != " + std::to_string(dim));
  };
  check(build_bosonization(fixtures::sweedler()), 4, "Sweedler");
  const QlsDatum cl = fixtures::clifford();
  check(build_bosonization(cl), law(cl), "Clifford");
  o.note("Clifford U has dim " + std::to_string(law(cl)) + " = |Gamma| prod N_i");
  check(build_lifting(fixtures::z4_minus_one(), fixtures::z4_mu_lifting()), 8, "Z4 mu-lifting");
  check(build_lifting(fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting()), 16, "Z2xZ2 lambda-lifting");
  return o;
}

Outcome dimension_law() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& d : all_fixtures()) {
    o.require(build_bosonization(d).dim() == law(d), "U over " + d.group().to_string());
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const auto info = analyze_W(*ctx, m.F(), m.W);
      std::size_t expect = static_cast<std::size_t>(m.F().size());
      for (int h : info.height) expect *= static_cast<std::size_t>(h);
      o.require(build_A(*ctx, m).dim() == expect, d.group().to_string() + " " + params_to_string(m));
      ++n;
    }
  }
  o.require(n >= 10, "fewer than 10 data");
  o.note(std::to_string(n) + " data");
  return o;
}

Outcome graded_suite() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const std::string tag = d.group().to_string() + " " + W_to_string(m.W) + " " + params_to_string(m);
      const auto A = build_A(*ctx, m);
      const auto loewy = loewy_filtration(A);
      o.require(!compare_filtrations(loewy, monomial_filtration(A)), tag + ": Loewy");
      try {
        check_graded_model(*ctx, m, associated_graded(A, loewy));
      } catch (const Error& e) {
        o.require(false, tag + ": " + e.what());
      }
      o.require(coinvariants(A).size() == 1, tag + ": coinvariants");
      if (m.F().size() == d.group().order() && m.W.size() == static_cast<std::size_t>(d.theta()))
        o.require(galois_map(A).bijective(), tag + ": Galois map");
      ++n;
    }
  }
  o.note(std::to_string(n) + " data");
  return o;
}

Outcome generation() {
  Outcome o;
  for (const auto& d : all_fixtures()) {
    const auto ctx = make_context(d);
    for (const auto& W : coordinate_subcomodules(d))
      o.require(check_degree_one_generation(*ctx, flag_of_subalgebra(*ctx, W)).pass,
                d.group().to_string() + " " + W_to_string(W));
  }
  const auto ctx = make_context(fixtures::clifford());
  o.require(check_degree_one_generation(*ctx, flag_of_subalgebra(*ctx, {Vec::unit(0) + Vec::unit(1)})).pass,
            "diagonal");
  GradedFlag bad;
  bad.layers = {{ctx->U->alg.unit}, {ctx->x(0)}, {ctx->U->alg.multiply(ctx->x(0), ctx->x(1))}};
  bool rejected = false;
  try {
    check_degree_one_generation(*ctx, bad);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::HypothesisViolated && std::string(e.what()).find("(3)") != std::string::npos;
  }
  o.require(rejected, "fabricated flag accepted");
  return o;
}

Outcome classification() {
  Outcome o;
  const auto r = classification_report(fixtures::sweedler());
  o.require(r.total == 6, "total " + std::to_string(r.total));
  o.require(r.rows.size() == 4, "rows " + std::to_string(r.rows.size()));
  int full_rows = 0;
  for (const auto& row : r.rows)
    if (row.W != "0") {
      ++full_rows;
      o.require(row.free_params == 1, "free parameters on " + row.W);
    }
  o.require(full_rows == 2, "W = V rows");
  const QlsDatum d = fixtures::z2z2_pair();
  const TwoCocycle psi = cocycle_classes(whole_group(d.group())).back();
  const TwoCocycle moved = multiply_by_coboundary(psi, {CycloNumber(1L), CycloNumber(2L), CycloNumber(3L), CycloNumber(5L)});
  o.require(dedupe({coordinate_datum(psi, {0, 1}), coordinate_datum(moved, {0, 1})}).size() == 1, "class merge");
  ModCatDatum a = coordinate_datum(TwoCocycle::trivial(trivial_subgroup(fixtures::sweedler().group())), {0});
  ModCatDatum b = a;
  b.xi[0] = CycloNumber(1L);
  o.require(dedupe({a, b}).size() == 2, "distinct xi merged");
  o.note("6 representatives in 4 rows");
  return o;
}

Outcome simplicity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& d : all_fixtures()) {
    const auto ctx = make_context(d);
    const Subgroup G = whole_group(d.group());
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      if (!(m.F() == G) || m.W.size() != static_cast<std::size_t>(d.theta())) continue;
      const auto s = check_simplicity(build_A(*ctx, m), d.exponent());
      o.require(s.verdict == Simplicity::SplitSimple, d.group().to_string() + " " + params_to_string(m) + ": " +
                                                          to_string(s.verdict));
      ++n;
    }
  }
  const auto ctx = make_context(fixtures::sweedler());
  ComoduleAlgebraRep control;
  control.alg = group_algebra(AbelianGroup({2})).alg;
  control.hopf = ctx->U;
  for (std::size_t i = 0; i < 2; ++i) control.coaction.push_back(tensor(ctx->U->alg.unit, Vec::unit(i), 2));
  const auto s = check_simplicity(control);
  o.require(s.verdict == Simplicity::Reducible && !s.witness.empty(), "trivial coaction not reducible");
  o.note(std::to_string(n) + " full data");
  return o;
}

Outcome clifford() {
  Outcome o;
  const QlsDatum d = fixtures::clifford();
  int passed = 0;
  for (const auto& F : enumerate_subgroups(d.group()))
    for (long x1 : {0L, 1L})
      for (long x2 : {0L, 1L}) {
        ModCatDatum m = coordinate_datum(TwoCocycle::trivial(F), {0, 1});
        m.xi = {CycloNumber(x1), CycloNumber(x2)};
        const auto c = exterior_clifford_check(d, m);
        o.require(c.pass, params_to_string(m) + ": " + c.detail);
        passed += c.pass;
      }
  o.require(passed >= 4, "fewer than 4 choices");
  ModCatDatum nondeg = coordinate_datum(TwoCocycle::trivial(trivial_subgroup(d.group())), {0, 1});
  nondeg.xi = {CycloNumber(1L), CycloNumber(1L)};
  const auto s = simple_modules(build_A(d, nondeg).alg, d.exponent());
  o.require(s.split && s.dim_radical == 0 && s.blocks == std::vector<int>{2}, "nondegenerate form: " + blocks_to_string(s));
  o.note(std::to_string(passed) + " choices; xi=(1,1) on F=1 gives " + blocks_to_string(s));
  return o;
}

Outcome deformation() {
  Outcome o;
  const std::vector<std::pair<QlsDatum, LiftingDatum>> lifts{{fixtures::z4_minus_one(), fixtures::z4_mu_lifting()},
                                                             {fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting()}};
  std::size_t pairs = 0, changed = 0;
  std::string first_change;
  for (const auto& [d, l] : lifts) {
    const auto r = verify_bigalois(build_bigalois(d, l));
    o.require(r.ok(), d.group().to_string() + " biGalois: " + r.summary());
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const auto A = build_A(*ctx, m);
      const auto T = transport(d, l, m);
      o.require(T.checks.ok(), "transport " + params_to_string(m) + ": " + T.checks.summary());
      const auto m1 = simple_modules(A.alg, d.exponent()), m2 = simple_modules(T.algebra.alg, d.exponent());
      if (m1.dim_radical != m2.dim_radical || m1.blocks != m2.blocks) {
        if (!changed++)
          first_change = d.group().to_string() + " " + W_to_string(m.W) + " " + blocks_to_string(m1) + " -> " +
                         blocks_to_string(m2);
      }
      ++pairs;
    }
  }
  // Trivial lifting: a -> S(a_(-1)) (x) a_(0) is an isomorphism onto the transport.
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const auto A = build_A(*ctx, m);
      const auto T = transport(d, LiftingDatum::trivial(d.theta()), m);
      TrackedEchelon<CycloNumber> e;
      for (const auto& v : T.embedding) e.insert(v);
      std::vector<Vec> phi;
      for (std::size_t i = 0; i < A.dim(); ++i) {
        Accumulator<CycloNumber> acc;
        for (const auto& [p, c] : A.coaction[i])
          for (const auto& [s, t] : A.hopf->antipode[p / A.dim()]) acc.add(s * A.dim() + p % A.dim(), c * t);
        phi.push_back(e.coordinates(acc.finish()).value_or(Vec()));
      }
      o.require(!check_isomorphism(A, T.algebra, phi), "trivial lifting " + params_to_string(m));
    }
  }
  const QlsDatum d = fixtures::z2z2_pair();
  const auto H = std::make_shared<HopfAlgebraRep>(build_bosonization(d));
  const HopfCocycle sigma = group_hopf_cocycle(*H, cocycle_classes(whole_group(d.group())).back());
  o.require(validate_hopf_cocycle(*H, sigma).ok(), "group cocycle");
  const auto Bs = cocycle_bigalois(H, sigma);
  const auto A = build_A(d, testsupport::full_datum(d));
  const auto C = cotensor(Bs, A);
  const auto phi = coaction_into_cotensor(C, A);
  o.require(phi && !check_isomorphism(deform_comodule_algebra(A, sigma, Bs.alg.hopf), C.alg, *phi),
            "H_sigma box A != A_sigma");
  o.require(changed == 0, "block data changed on " + std::to_string(changed) + " of " + std::to_string(pairs) +
                              " transports, e.g. " + first_change);
  o.note(std::to_string(pairs) + " transported data");
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qlsmodcat-acceptance";
  fs::create_directories(dir);
  setenv("QLSMODCAT_CACHE_DIR", (dir / "cache").c_str(), 1);
  std::ostringstream out, err;
  const std::string input = std::string(QLSMODCAT_DATA_DIR) + "/clifford.json";
  const int a = run_command({"classify", input, "--seed", "3", "-o", (dir / "a.json").string()}, out, err);
  const int b = run_command({"classify", input, "--seed", "3", "--no-cache", "-o", (dir / "b.json").string()}, out, err);
  o.require(a == 0 && b == 0, "classify failed: " + err.str());
  const std::string x = slurp(dir / "a.json"), y = slurp(dir / "b.json");
  o.require(!x.empty() && x == y, "artifacts differ");
  o.note(std::to_string(x.size()) + " bytes");
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hopf-axioms", hopf_axioms},       {"dimension-law", dimension_law}, {"graded-structure", graded_suite},
      {"degree-one-generation", generation}, {"classification", classification}, {"simplicity", simplicity},
      {"clifford-example", clifford},     {"cocycle-transport", deformation}, {"determinism", determinism}};
  int failed = 0, i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " " << i << " " << name;
    for (const auto& n : o.notes) line << "; " << n;
    for (const auto& f : o.failures) line << "; " << f;
    line.precision(2);
    line << std::fixed << " (" << secs << "s)";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
