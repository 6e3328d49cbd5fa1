#include <doctest.h>

#include <algorithm>
#include <random>

#include "singpoincare/power_series.hpp"

using namespace singpoincare;

namespace {

FactorForm cusp_form() {
  FactorForm f(1);
  f.multiply({2}, -1);
  f.multiply({3}, -1);
  f.multiply({6}, 1);
  return f;
}

// Pascal's triangle, independent of the closed form used by the library.
std::vector<std::vector<Integer>> pascal(int n) {
  std::vector<std::vector<Integer>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, Integer(1));
    for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows;
}

FactorForm random_form(std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<int> e(0, 3), ex(-3, 2), count(0, 4);
  FactorForm f(r);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial k(r);
    for (auto& v : k) v = e(rng);
    if (degree(k) == 0) k[0] = 1;
    int x = ex(rng);
    if (x == 0) x = -1;
    f.multiply(k, x);
  }
  return f;
}

}  // namespace

TEST_CASE("geometric series and binomial coefficients") {
  FactorForm g(1);
  g.multiply({1}, -1);
  const IntSeries s = expand(g, 15);
  for (int l = 0; l <= 15; ++l) CHECK(s.coefficient({l}) == 1);
  CHECK(s.coefficient({16}) == 0);

  const auto rows = pascal(40);
  for (int c = 1; c <= 6; ++c)
    for (int l = 0; l <= 30; ++l) CHECK(binomial_series_coefficient(-c, l) == rows[c + l - 1][l]);
  for (int e = 0; e <= 6; ++e)
    for (int l = 0; l <= 8; ++l)
      CHECK(binomial_series_coefficient(e, l) == (l > e ? Integer(0) : (l % 2 ? Integer(-rows[e][l]) : rows[e][l])));
}

TEST_CASE("cusp product expands to counts of 2a + 3b") {
  const IntSeries s = expand(cusp_form(), 40);
  for (int n = 0; n <= 40; ++n) {
    auto count = [](int m) {
      int c = 0;
      for (int a = 0; 2 * a <= m; ++a)
        if ((m - 2 * a) % 3 == 0) ++c;
      return c;
    };
    const int expected = count(n) - (n >= 6 ? count(n - 6) : 0);
    CHECK(s.coefficient({n}) == expected);
  }
  // The semigroup <2, 3>.
  CHECK(s.coefficient({1}) == 0);
  for (int n = 2; n <= 40; ++n) CHECK(s.coefficient({n}) == 1);
}

TEST_CASE("expansion is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 3;
    const Truncation t{8, std::nullopt};
    FactorForm a = random_form(rng, r), b = random_form(rng, r);
    FactorForm ab = a;
    ab.multiply(b);
    CHECK(expand(ab, t) == expand(a, t) * expand(b, t));
  }
}

TEST_CASE("canonical form does not depend on factor order") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<Monomial, long>> factors;
    for (int i = 0; i < 6; ++i) {
      Monomial k{std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng)};
      factors.emplace_back(k, std::uniform_int_distribution<int>(-2, 2)(rng) | 1);
    }
    FactorForm a(2), b(2);
    for (const auto& [k, e] : factors) a.multiply(k, e);
    std::shuffle(factors.begin(), factors.end(), rng);
    for (const auto& [k, e] : factors) b.multiply(k, e);
    CHECK(a == b);
  }
  FactorForm c(1);
  c.multiply({2}, 3);
  c.multiply({2}, -3);
  CHECK(c.is_one());
  CHECK_THROWS_AS(c.multiply({0}, 1), MathError);
  CHECK_THROWS_AS(c.multiply({1, 1}, 1), MathError);
  CHECK_THROWS_AS(c.multiply({-1}, 1), MathError);
}

TEST_CASE("tags: trivial tags drop, tagged forms need the equivariant expansion") {
  FactorForm f(1);
  f.multiply({2}, -1, Character{});
  CHECK(!f.tagged());
  f.multiply({2}, -1, Character({Rational(1, 2)}));
  CHECK(f.tagged());
  CHECK_THROWS_AS(expand(f, 4), MathError);
  const EquivariantSeries s = expand_equivariant(f, Truncation{4, std::nullopt});
  // (1 - t^2)^-1 (1 - chi t^2)^-1 with chi^2 = 1: t^2 -> 1 + chi, t^4 -> 2 + chi.
  const Character chi({Rational(1, 2)});
  CHECK(s.coefficient({2}) == GroupRingElement(Integer(1)) + GroupRingElement(chi, 1));
  CHECK(s.coefficient({4}) == GroupRingElement(Integer(2)) + GroupRingElement(chi, 1));
  CHECK(chi.pow(2).trivial());
  CHECK(Character({Rational(1, 3), Rational(2, 3)}).order() == 3);
  CHECK(Character({Rational(5, 2)}).to_string() == "[1/2]");
}

TEST_CASE("factor form substitution") {
  FactorForm f(2);
  f.multiply({1, 1}, -1);
  f.multiply({2, 0}, 1);
  const FactorForm g = substitute(f, {{1}, {1}});
  CHECK(g.is_one());
  CHECK(identify_variables(f).is_one());

  // The cusp with t -> t^2.
  FactorForm cusp2(1);
  cusp2.multiply({4}, -1);
  cusp2.multiply({6}, -1);
  cusp2.multiply({12}, 1);
  CHECK(substitute(cusp_form(), {{2}}) == cusp2);

  // Substitution commutes with expansion.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const FactorForm h = random_form(rng, 2);
    const MonomialMap images{{1, 0, 2}, {0, 1, 1}};
    const IntSeries direct = expand(substitute(h, images), 9);
    const auto via = substitute(expand(h, 9), images, 9, 3);
    CHECK(!via.truncation_loss);
    CHECK(via.series == direct);
  }

  FactorForm z(2);
  z.multiply({1, 0}, -1);
  CHECK_THROWS_AS(substitute(z, {{0}, {1}}), MathError);
}

TEST_CASE("series substitution reports truncation loss") {
  const IntSeries s = expand(cusp_form(), 10);
  const auto r = substitute(s, {{2}}, 30, 1);
  CHECK(r.truncation_loss);
  CHECK(r.guaranteed_total == 21);
  const auto ok = substitute(s, {{2}}, 20, 1);
  CHECK(!ok.truncation_loss);
  CHECK(ok.series == expand(substitute(cusp_form(), {{2}}), 20));
}

TEST_CASE("box truncation") {
  FactorForm f(2);
  f.multiply({1, 0}, -1);
  f.multiply({0, 1}, -1);
  const IntSeries s = expand(f, Truncation{10, std::vector<int>{2, 3}});
  CHECK(s.terms().size() == 12);
  CHECK(s.coefficient({2, 3}) == 1);
  CHECK(s.coefficient({3, 0}) == 0);
}

TEST_CASE("text rendering") {
  CHECK(to_text(cusp_form(), {"t"}) == "(1 - t^2)^-1 (1 - t^3)^-1 (1 - t^6)");
  CHECK(to_text(FactorForm(2), default_variable_names(2)) == "1");
  CHECK(default_variable_names(2) == std::vector<std::string>{"t1", "t2"});
  CHECK(to_text(one_minus_t(5), {"t"}) == "1 - t");
  CHECK(to_text(expand(cusp_form(), 4), {"t"}) == "1 + t^2 + t^3 + t^4");
  CHECK(monomial_text({1, 2}, {"t1", "t2"}) == "t1 t2^2");
  FactorForm tagged(1);
  tagged.multiply({2}, -2, Character({Rational(1, 2)}));
  CHECK(to_text(tagged, {"t"}) == "(1 - [1/2] t^2)^-2");
}
