#include <doctest.h>

#include <functional>

#include "singpoincare/errors.hpp"
#include "singpoincare/poincare_engine.hpp"

using namespace singpoincare;

namespace {

PuiseuxBranch branch(std::string name, int n, std::vector<std::pair<int, int>> terms, bool swapped = false) {
  std::vector<Term> ts;
  for (auto [e, c] : terms) ts.push_back({e, Rational(c)});
  return PuiseuxBranch::puiseux(std::move(name), n, std::move(ts), swapped);
}

FactorForm form(std::size_t r, std::vector<std::pair<Monomial, long>> factors) {
  FactorForm f(r);
  for (const auto& [k, e] : factors) f.multiply(k, e);
  return f;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.kind();
  }
  FAIL("no MathError thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("cusp: curve, ideal and divisorial indices") {
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}})});
  const FactorForm cusp = form(1, {{{2}, -1}, {{3}, -1}, {{6}, 1}});
  CHECK(filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Curve, "C"}}) == cusp);
  CHECK(filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Ideal, "C"}}) == cusp);
  CHECK(poincare_from_graph(rc.graph, euler_data(rc.graph), k_vectors(rc.graph, {"C"})) == cusp);
  CHECK(alexander_from_strata(rc.graph, euler_data(rc.graph), k_vectors(rc.graph, {"C"})) == cusp);

  // The divisorial valuation of E3 does not puncture it.
  CHECK(filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Divisorial, "E3"}}) ==
        form(1, {{{2}, -1}, {{3}, -1}}));
  CHECK(filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Divisorial, "E1"}}) == form(1, {{{1}, -2}}));

  const ZetaAlexander za = zeta_and_alexander(cusp);
  CHECK(za.zeta == cusp);
  const IntSeries delta = expand(za.alexander, 12);
  CHECK(delta == expand(form(1, {{{1}, 1}, {{6}, 1}, {{2}, -1}, {{3}, -1}}), 12));
  CHECK(to_text(delta, {"t"}) == "1 - t + t^2");
}

TEST_CASE("Hopf pair and cusp with a line") {
  const ResolvedCurve hopf = resolve({branch("A", 1, {{1, 1}}), branch("B", 1, {{1, -1}})});
  const FiltrationSpec two{{FiltrationIndex::Kind::Curve, "A"}, {FiltrationIndex::Kind::Curve, "B"}};
  CHECK(filtration_poincare(hopf.graph, two).is_one());

  // x = 0 is given as (0, t).
  PuiseuxBranch line = PuiseuxBranch::puiseux("L", 1, {}, true);
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}}), line});
  const FiltrationSpec spec{{FiltrationIndex::Kind::Curve, "C"}, {FiltrationIndex::Kind::Curve, "L"}};
  const FactorForm p = filtration_poincare(rc.graph, spec);
  const IntSeries s = expand(p, 30);
  CHECK(s.terms().size() == 2);
  CHECK(s.coefficient({0, 0}) == 1);
  CHECK(s.coefficient({3, 1}) == 1);
  CHECK(zeta_and_alexander(p).alexander == p);
  CHECK(expand(zeta_and_alexander(p).zeta, 10) == expand(form(1, {{{4}, -1}, {{8}, 1}}), 10));
}

TEST_CASE("strata grouping matches the per-component product") {
  for (const auto& bs : std::vector<std::vector<PuiseuxBranch>>{
           {branch("C", 2, {{5, 1}})},
           {branch("C", 4, {{6, 1}, {7, 1}})},
           {branch("A", 2, {{3, 1}}), branch("B", 1, {{1, 1}})},
           {branch("A", 1, {{1, 1}}), branch("B", 1, {{1, 2}}), branch("D", 1, {{1, 3}})}}) {
    const ResolvedCurve rc = resolve(bs);
    std::vector<std::string> names;
    for (const auto& b : bs) names.push_back(b.name);
    const KVectors k = k_vectors(rc.graph, names);
    CHECK(alexander_from_strata(rc.graph, euler_data(rc.graph), k) ==
          poincare_from_graph(rc.graph, euler_data(rc.graph), k));
    FiltrationSpec spec;
    for (const auto& n : names) spec.push_back({FiltrationIndex::Kind::Curve, n});
    const FiltrationData data = filtration_data(rc.graph, spec);
    CHECK(data.k == k);
  }
}

TEST_CASE("a corner blowup with chi = 0 leaves the series unchanged") {
  for (const auto& bs : std::vector<std::vector<PuiseuxBranch>>{{branch("C", 2, {{3, 1}})},
                                                                 {branch("C", 3, {{4, 1}})},
                                                                 {branch("A", 2, {{3, 1}}), branch("B", 1, {{1, 1}})}}) {
    const ResolvedCurve rc = resolve(bs);
    const auto& [a, b] = rc.graph.edges.front();
    const ResolutionGraph h = blow_up_corner(rc.graph, a, b, "X");
    std::vector<std::string> names;
    for (const auto& br : bs) names.push_back(br.name);
    const EulerData eh = euler_data(h);
    CHECK(eh.chi.at("X") == 0);
    const IntSeries before = expand(poincare_from_graph(rc.graph, euler_data(rc.graph), k_vectors(rc.graph, names)), 20);
    const IntSeries after = expand(poincare_from_graph(h, eh, k_vectors(h, names)), 20);
    CHECK(before == after);
  }
}

TEST_CASE("mixed base of the cusp") {
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}})});
  const MixedBase base = mixed_poincare(rc, {"E1", "E2", "E3"}, {});
  CHECK(base.form == form(3, {{{1, 1, 2}, -1}, {{1, 2, 3}, -1}}));
  const MixedBase with = mixed_poincare(rc, {"E3"}, {"C"});
  CHECK(with.form == form(2, {{{2, 2}, -1}, {{3, 3}, -1}, {{6, 6}, 1}}));
  CHECK(kind_of([&] { mixed_poincare(rc, {"E7"}, {}); }) == ErrorKind::UnknownComponent);
  CHECK(kind_of([&] { mixed_poincare(rc, {}, {"Z"}); }) == ErrorKind::UnknownBranch);
}

TEST_CASE("input errors") {
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}})});
  CHECK(kind_of([&] { k_vectors(rc.graph, {"nope"}); }) == ErrorKind::BadReference);
  CHECK(kind_of([&] { poincare_from_graph(rc.graph, euler_data(rc.graph), KVectors(2, Monomial{1})); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Curve, "Z"}}); }) ==
        ErrorKind::UnknownBranch);

  ResolutionGraph a1;
  a1.components = {{"E1", -2}};
  CHECK(kind_of([&] { filtration_poincare(a1, {{FiltrationIndex::Kind::Divisorial, "E1"}}); }) ==
        ErrorKind::NotIntegral);
}
