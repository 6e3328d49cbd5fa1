#include <doctest.h>

#include <functional>
#include <random>

#include "singpoincare/errors.hpp"
#include "singpoincare/ideal_calculus.hpp"

using namespace singpoincare;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.kind();
  }
  FAIL("no MathError thrown");
  return ErrorKind::InvalidInput;
}

ResolvedCurve cusp() { return resolve({PuiseuxBranch::puiseux("C", 2, {{3, Rational(1)}})}); }

const std::vector<std::string> kAll{"E1", "E2", "E3"};

KVectors as_k(const std::vector<Rational>& v) {
  KVectors k;
  for (const auto& q : v) {
    REQUIRE(q.get_den() == 1);
    k.push_back({static_cast<int>(q.get_num().get_si())});
  }
  return k;
}

}  // namespace

TEST_CASE("divisorial products on the cusp match the product over multiplicities") {
  const ResolvedCurve rc = cusp();
  const LinkingData ld = linking_data(rc.graph);
  const MixedBase base = mixed_poincare(rc, kAll, {});
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    IdealPresentation ip{"I", {}, {}};
    std::vector<Integer> n;
    for (const auto& s : kAll) {
      n.push_back(e(rng));
      ip.divisorial[s] = Rational(n.back());
    }
    CHECK_NOTHROW(validate(ip, rc.graph, GraphMode::PlaneCurve));
    const auto k = multiplicities_of(ip, rc.graph, ld);
    CHECK(k == divisorial_exponents_from_multiplicities(ld, n));
    const FactorForm lhs = poincare_of_ideal(ip, base);
    if (ip.trivial()) {
      CHECK(lhs.is_one());
      continue;
    }
    const FactorForm rhs = poincare_from_graph(rc.graph, euler_data(rc.graph, {}), as_k(k));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("maximal ideal of the cusp") {
  const ResolvedCurve rc = cusp();
  const MixedBase base = mixed_poincare(rc, kAll, {});
  // m = I_{E1}: multiplicities (1, 1, 2).
  const IdealPresentation m{"m", {{"E1", Rational(1)}}, {}};
  const LinkingData ld = linking_data(rc.graph);
  CHECK(multiplicities_of(m, rc.graph, ld) == std::vector<Rational>{1, 1, 2});
  FactorForm expected(1);
  expected.multiply({1}, -2);
  CHECK(poincare_of_ideal(m, base) == expected);
}

TEST_CASE("curve ideals reproduce the curve filtration") {
  const ResolvedCurve rc = cusp();
  const MixedBase base = mixed_poincare(rc, kAll, {"C"});
  const IdealPresentation ic{"IC", {}, {{"C", Integer(1)}}};
  CHECK(poincare_of_ideal(ic, base) == filtration_poincare(rc.graph, {{FiltrationIndex::Kind::Curve, "C"}}));

  // Two ideals at once.
  const IdealPresentation m{"m", {{"E1", Rational(1)}}, {}};
  const FactorForm two = poincare_of_ideal_set({m, ic}, base);
  CHECK(two.variables() == 2);
  const FactorForm both = filtration_poincare(
      rc.graph, {{FiltrationIndex::Kind::Divisorial, "E1"}, {FiltrationIndex::Kind::Curve, "C"}});
  CHECK(two == both);
}

TEST_CASE("a base branch absent from every ideal violates the hypothesis") {
  const ResolvedCurve rc = cusp();
  const MixedBase base = mixed_poincare(rc, kAll, {"C"});
  const IdealPresentation m{"m", {{"E1", Rational(1)}}, {{"C", Integer(0)}}};
  CHECK(kind_of([&] { poincare_of_ideal(m, base); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([&] { poincare_of_ideal_set({m, m}, base); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("validation of presentations") {
  const ResolvedCurve rc = cusp();
  CHECK(kind_of([&] { validate(IdealPresentation{"I", {{"E1", Rational(1, 2)}}, {}}, rc.graph, GraphMode::PlaneCurve); }) ==
        ErrorKind::NotIntegral);
  CHECK(kind_of([&] { validate(IdealPresentation{"I", {{"E1", Rational(-1)}}, {}}, rc.graph, GraphMode::PlaneCurve); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([&] { validate(IdealPresentation{"I", {{"E9", Rational(1)}}, {}}, rc.graph, GraphMode::PlaneCurve); }) ==
        ErrorKind::UnknownComponent);
  CHECK(kind_of([&] { validate(IdealPresentation{"I", {}, {{"Z", Integer(1)}}}, rc.graph, GraphMode::PlaneCurve); }) ==
        ErrorKind::UnknownBranch);

  ResolutionGraph a2;
  a2.components = {{"E1", -2}, {"E2", -2}};
  a2.edges = {{"E1", "E2"}};
  CHECK_NOTHROW(validate(IdealPresentation{"I", {{"E1", Rational(1, 3)}, {"E2", Rational(2, 3)}}, {}}, a2,
                         GraphMode::RationalSingularity));
  CHECK(kind_of([&] {
          validate(IdealPresentation{"I", {{"E1", Rational(1, 3)}}, {}}, a2, GraphMode::RationalSingularity);
        }) == ErrorKind::NotIntegral);

  const MixedBase base = mixed_poincare(rc, kAll, {});
  CHECK(kind_of([&] { poincare_of_ideal(IdealPresentation{"I", {{"E1", Rational(1, 2)}}, {}}, base); }) ==
        ErrorKind::NotIntegral);
  CHECK(kind_of([&] { poincare_of_ideal(IdealPresentation{"I", {{"E9", Rational(1)}}, {}}, base); }) ==
        ErrorKind::UnknownComponent);
  CHECK(poincare_of_ideal(IdealPresentation{"I", {}, {}}, base).is_one());
}

TEST_CASE("rescaling every variable") {
  FactorForm f(2);
  f.multiply({1, 2}, -1);
  FactorForm g(2);
  g.multiply({3, 6}, -1);
  CHECK(dsigma_rescale(f, 3) == g);
  CHECK(dsigma_rescale(f, 1) == f);
  CHECK_THROWS_AS(dsigma_rescale(f, 0), MathError);
}

TEST_CASE("sets of curve ideals") {
  const auto a = PuiseuxBranch::puiseux("A", 1, {{1, Rational(1)}});
  const auto b = PuiseuxBranch::puiseux("B", 1, {{1, Rational(-1)}});
  const ResolvedCurve hopf = resolve({a, b});
  const MixedBase hb = mixed_poincare(hopf, {"E1"}, {"A", "B"});
  const IdealPresentation ia{"IA", {}, {{"A", Integer(1)}}}, ib{"IB", {}, {{"B", Integer(1)}}};
  CHECK(poincare_of_ideal_set({ia, ib}, hb).is_one());
  CHECK(kind_of([&] { poincare_of_ideal(ia, hb); }) == ErrorKind::HypothesisViolated);

  const auto cusp_b = PuiseuxBranch::puiseux("C", 2, {{3, Rational(1)}});
  const auto line = PuiseuxBranch::puiseux("L", 1, {}, true);
  const ResolvedCurve rc = resolve({cusp_b, line});
  std::vector<std::string> comps;
  for (const auto& c : rc.graph.components) comps.push_back(c.id);
  const MixedBase base = mixed_poincare(rc, comps, {"C", "L"});
  const IdealPresentation ic{"IC", {}, {{"C", Integer(1)}}}, il{"IL", {}, {{"L", Integer(1)}}};
  CHECK(poincare_of_ideal_set({ic, il}, base) ==
        poincare_from_graph(rc.graph, euler_data(rc.graph), k_vectors(rc.graph, {"C", "L"})));
}

TEST_CASE("rescaling on A1 and the cusp") {
  ResolutionGraph a1;
  a1.components = {{"E1", -2}};
  const LinkingData ld = linking_data(a1);
  FactorForm f(1);
  f.multiply({1}, -2);
  FactorForm g(1);
  g.multiply({2}, -2);
  CHECK(dsigma_rescale(f, element_order(ld, "E1")) == g);
  CHECK(element_order(linking_data(cusp().graph), "E3") == 1);
}
