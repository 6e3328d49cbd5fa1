#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "singpoincare/curve_resolver.hpp"
#include "singpoincare/errors.hpp"

using namespace singpoincare;

namespace {

PuiseuxBranch branch(std::string name, int n, std::vector<std::pair<int, int>> terms, bool swapped = false) {
  std::vector<Term> ts;
  for (auto [e, c] : terms) ts.push_back({e, Rational(c)});
  return PuiseuxBranch::puiseux(std::move(name), n, std::move(ts), swapped);
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

int self_int(const ResolutionGraph& g, const std::string& id) { return g.components[g.index_of(id)].self_intersection; }

// ord_t of f(x(t), y(t)) for f given as {(i, j) -> c}.
long order_along(const std::map<std::pair<int, int>, int>& f, const PuiseuxBranch& b) {
  auto mul = [](const UniPoly& a, const UniPoly& c) {
    UniPoly r(a.size() + c.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) r[i + j] += a[i] * c[j];
    return r;
  };
  auto power = [&](const UniPoly& a, int k) {
    UniPoly r{Rational(1)};
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  };
  UniPoly total;
  for (const auto& [ij, c] : f) {
    UniPoly term = mul(power(b.x_poly(), ij.first), power(b.y_poly(), ij.second));
    if (total.size() < term.size()) total.resize(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k] * c;
  }
  for (std::size_t k = 0; k < total.size(); ++k)
    if (total[k] != 0) return static_cast<long>(k);
  return -1;
}

InfinitelyNearTree random_tree(std::mt19937& rng, int max_points) {
  InfinitelyNearTree tree;
  tree.blow_up_origin();
  std::uniform_int_distribution<int> count(1, max_points);
  const int n = count(rng);
  while (static_cast<int>(tree.size()) < n) {
    std::uniform_int_distribution<std::size_t> pick(0, tree.size() - 1);
    const std::size_t p = pick(rng);
    std::uniform_int_distribution<int> kind(0, 3);
    std::optional<Rational> slope;
    switch (kind(rng)) {
      case 0: slope = std::nullopt; break;
      case 1: slope = Rational(0); break;
      default: slope = Rational(std::uniform_int_distribution<int>(1, 4)(rng)); break;
    }
    if (tree.child(p, slope)) continue;
    tree.blow_up(p, slope);
  }
  return tree;
}

}  // namespace

TEST_CASE("branch validation") {
  CHECK_NOTHROW(validate_branch(branch("C", 2, {{3, 1}})));
  CHECK(kind_of([] { validate_branch(branch("C", 2, {{4, 1}})); }) == ErrorKind::NotPrimitive);
  CHECK(kind_of([] { validate_branch(branch("C", 2, {{3, 1}, {3, 2}})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { validate_branch(branch("C", 2, {{0, 1}})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { validate_branch(branch("C", 2, {{3, 0}})); }) == ErrorKind::InvalidInput);
}

TEST_CASE("a smooth branch needs one blowup") {
  const ResolvedCurve rc = resolve({branch("L", 1, {{1, 1}})});
  CHECK(rc.graph.size() == 1);
  CHECK(self_int(rc.graph, "E1") == -1);
  CHECK(rc.graph.arrows.size() == 1);
  CHECK(rc.valuation("E1", "L") == 1);
  CHECK(rc.multiplicity_sequences.at("L") == std::vector<int>{1});
}

TEST_CASE("the cusp resolves to the (-3, -2, -1) star") {
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}})});
  CHECK(rc.graph.size() == 3);
  CHECK(self_int(rc.graph, "E1") == -3);
  CHECK(self_int(rc.graph, "E2") == -2);
  CHECK(self_int(rc.graph, "E3") == -1);
  CHECK(rc.graph.edges.size() == 2);
  REQUIRE(rc.graph.arrows.size() == 1);
  CHECK(rc.graph.arrows[0].component == "E3");
  CHECK(rc.multiplicity_sequences.at("C") == std::vector<int>{2, 1, 1});
  CHECK(rc.valuations.at("C") == std::vector<Integer>{2, 3, 6});
  CHECK(rc.graph.ideal("C").multiplicity.at("E3") == 6);
  CHECK_NOTHROW(validate(rc.graph, GraphMode::PlaneCurve));

  // Swapped coordinates give an isomorphic graph.
  const ResolvedCurve sw = resolve({branch("C", 2, {{3, 1}}, true)});
  CHECK(sw.valuations.at("C") == std::vector<Integer>{2, 3, 6});
}

TEST_CASE("two transverse lines") {
  const ResolvedCurve rc = resolve({branch("A", 1, {{1, 1}}), branch("B", 1, {{1, 2}})});
  CHECK(rc.graph.size() == 1);
  CHECK(rc.graph.arrows.size() == 2);
  CHECK(intersection_number(branch("A", 1, {{1, 1}}), branch("B", 1, {{1, 2}})) == 1);
}

TEST_CASE("intersection numbers against substitution into equations") {
  const auto cusp = branch("C", 2, {{3, 1}});
  // y = x^5 along (t^2, t^3).
  const auto line = branch("L", 1, {{5, 1}});
  CHECK(intersection_number(cusp, line) == order_along({{{0, 1}, 1}, {{5, 0}, -1}}, cusp));
  CHECK(intersection_number(cusp, line) == 3);

  // x = y^7 along (t^2, t^3).
  CHECK(intersection_number(cusp, branch("M", 1, {{7, 1}}, true)) == 2);

  const std::map<std::pair<int, int>, int> cusp_eq{{{0, 2}, 1}, {{3, 0}, -1}};
  const auto grazing = branch("D", 2, {{3, 1}, {4, 1}});
  CHECK(intersection_number(cusp, grazing) == order_along(cusp_eq, grazing));
  CHECK(intersection_number(cusp, grazing) == 7);
  const auto scaled = branch("D", 2, {{3, 2}});
  CHECK(intersection_number(cusp, scaled) == order_along(cusp_eq, scaled));
  CHECK(intersection_number(cusp, scaled) == 6);

  // (t^3, t^5) against (t^2, t^3).
  const auto e8 = branch("F", 3, {{5, 1}});
  CHECK(intersection_number(cusp, e8) == order_along(cusp_eq, e8));
}

TEST_CASE("random pairs agree with substitution") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), expo(1, 9);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 30; ++trial) {
    // Smooth branch y = g(x) with equation y - g(x).
    std::map<std::pair<int, int>, int> eq{{{0, 1}, 1}};
    std::vector<std::pair<int, int>> g;
    for (int e = 1; e <= 6; ++e) {
      const int c = coef(rng);
      if (c != 0) {
        g.emplace_back(e, c);
        eq[{e, 0}] -= c;
      }
    }
    if (g.empty()) continue;
    const auto smooth = branch("S", 1, g);
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    int m = expo(rng) + n;
    if (std::gcd(n, m) != 1) ++m;
    if (std::gcd(n, m) != 1) continue;
    const auto other = branch("O", n, {{m, 1}, {m + 1, coef(rng) == 0 ? 1 : 2}});
    const long expected = order_along(eq, other);
    REQUIRE(expected > 0);
    CHECK(intersection_number(smooth, other) == expected);
    CHECK(intersection_number(other, smooth) == expected);
    ++done;
  }
  CHECK(done >= 20);
}

TEST_CASE("same germ twice is rejected") {
  const auto a = branch("A", 2, {{3, 1}});
  const auto b = branch("B", 2, {{3, -1}});
  CHECK(kind_of([&] { resolve({a, b}); }) == ErrorKind::IndistinguishableBranches);

  // A reparametrized copy is caught once the precision cap is reached.
  PuiseuxBranch p;
  p.name = "P";
  p.x_terms = {{1, Rational(1)}, {2, Rational(1)}};
  p.y_terms = {{2, Rational(1)}, {3, Rational(2)}, {4, Rational(1)}};
  ResolveOptions opts;
  opts.initial_precision = 16;
  opts.max_precision = 64;
  CHECK(kind_of([&] { resolve({branch("Q", 1, {{2, 1}}), p}, opts); }) == ErrorKind::IndistinguishableBranches);
}

TEST_CASE("valuation recursion and proximity inequality") {
  for (const auto& b : {branch("C", 2, {{3, 1}}), branch("C", 4, {{6, 1}, {7, 1}}), branch("C", 3, {{7, 1}}),
                        branch("C", 2, {{5, 1}})}) {
    const ResolvedCurve rc = resolve({b});
    const auto& tree = rc.tree;
    for (std::size_t p = 0; p < tree.size(); ++p) {
      int m_p = tree.point(p).multiplicities.count("C") ? tree.point(p).multiplicities.at("C") : 0;
      int sum = 0;
      Integer v = m_p;
      for (std::size_t q = 0; q < tree.size(); ++q) {
        if (q == p || !tree.proximate(q, p)) continue;
        if (tree.point(q).multiplicities.count("C")) sum += tree.point(q).multiplicities.at("C");
      }
      CHECK(m_p >= sum);
      for (std::size_t q = 0; q < p; ++q)
        if (tree.proximate(p, q)) v += rc.valuations.at("C")[q];
      CHECK(rc.valuations.at("C")[p] == v);
    }
    // The multiplicity at the origin is the order of the parametrization.
    CHECK(rc.multiplicity_sequences.at("C").front() == *b.x_order());
    CHECK_NOTHROW(validate(rc.graph, GraphMode::PlaneCurve));
  }
}

TEST_CASE("curvettes of the cusp graph") {
  const ResolvedCurve rc = resolve({branch("C", 2, {{3, 1}})});
  const auto l1 = curvette(rc, "E1", Rational(5));
  const auto l3 = curvette(rc, "E3", Rational(5));
  CHECK(intersection_number(l1, branch("C", 2, {{3, 1}})) == 2);
  CHECK(intersection_number(l3, branch("C", 2, {{3, 1}})) == 6);
  // Pairwise intersections of curvettes recover M.
  const std::vector<std::string> ids{"E1", "E2", "E3"};
  const IntMatrix m{{1, 1, 2}, {1, 2, 3}, {2, 3, 6}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(intersection_number(curvette(rc, ids[i], Rational(7), "a"), curvette(rc, ids[j], Rational(11), "b")) ==
            m.at(i, j));
  const auto special = special_slopes(rc, "E3");
  CHECK(!special.empty());
  CHECK(kind_of([&] { curvette(rc, "E3", special.front()); }) == ErrorKind::SeedNotGeneric);
  CHECK(kind_of([&] { curvette(rc, "E9", Rational(1)); }) == ErrorKind::UnknownComponent);
}

TEST_CASE("random proximity trees: E M = -I and curvettes realize M") {
  std::mt19937 rng(2024);
  int curvette_graphs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    InfinitelyNearTree tree = random_tree(rng, 8);
    const ResolvedCurve rc = from_tree(tree);
    CHECK_NOTHROW(validate(rc.graph, GraphMode::PlaneCurve));
    const LinkingData ld = linking_data(rc.graph);
    CHECK(to_rational(rc.graph.intersection_matrix()) * ld.m == -RatMatrix::identity(rc.graph.size()));
    CHECK(ld.integral());
    if (trial % 10 != 0 || rc.graph.size() > 6) continue;
    ++curvette_graphs;
    for (std::size_t i = 0; i < rc.graph.size(); ++i)
      for (std::size_t j = i; j < rc.graph.size(); ++j) {
        const auto& a = rc.graph.components[i].id;
        const auto& b = rc.graph.components[j].id;
        for (int s : {101, 103, 107}) {
          const auto ca = curvette(rc, a, Rational(s), "a");
          const auto cb = curvette(rc, b, Rational(s + 200), "b");
          CHECK(Rational(intersection_number(ca, cb)) == ld.m.at(i, j));
        }
      }
  }
  CHECK(curvette_graphs >= 5);
}

TEST_CASE("corner blowups on the tree") {
  InfinitelyNearTree tree;
  tree.blow_up_origin();
  tree.blow_up(0, std::nullopt);
  const std::size_t c = tree.blow_up_corner(0, 1);
  CHECK(tree.point(c).proximate_to.size() == 2);
  const ResolutionGraph g = tree.graph();
  CHECK(self_int(g, "E1") == -3);
  CHECK(self_int(g, "E2") == -2);
  CHECK(self_int(g, "E3") == -1);
  CHECK(kind_of([&] { tree.blow_up_corner(0, 1); }) == ErrorKind::BadReference);
}
