#include "singpoincare/power_series.hpp"

#include <numeric>
#include <sstream>

namespace singpoincare {

// ---------------------------------------------------------------------------
// Series helpers

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool Truncation::admits(const Monomial& m) const {
  if (degree(m) > total) return false;
  if (box)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > (*box)[i]) return false;
  return true;
}

bool FactorForm::tagged() const {
  for (const auto& [key, e] : factors_)
    if (key.tag) return true;
  return false;
}

void FactorForm::multiply(const Monomial& k, long exponent, const std::optional<Character>& tag) {
  if (k.size() != r_) throw MathError(ErrorKind::DimensionMismatch, "factor key length differs from variable count");
  if (degree(k) == 0) throw MathError(ErrorKind::InvalidInput, "factor key must be a nonzero exponent vector");
  for (int v : k)
    if (v < 0) throw MathError(ErrorKind::InvalidInput, "factor key with a negative exponent");
  if (exponent == 0) return;
  FactorKey key{k, tag && !tag->trivial() ? tag : std::nullopt};
  auto [it, inserted] = factors_.try_emplace(key, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

void FactorForm::multiply(const FactorForm& other) {
  if (other.r_ != r_) throw MathError(ErrorKind::DimensionMismatch, "factor forms in different variable counts");
  for (const auto& [key, e] : other.factors_) multiply(key.k, e, key.tag);
}

Integer binomial_series_coefficient(long e, unsigned long l) {
  Integer b;
  if (e >= 0) {
    if (l > static_cast<unsigned long>(e)) return 0;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(e), l);
    return (l % 2) ? Integer(-b) : b;
  }
  const unsigned long c = static_cast<unsigned long>(-e);
  mpz_bin_uiui(b.get_mpz_t(), c + l - 1, l);
  return b;
}

namespace {

template <class R, class CoefficientOf>
Series<R> expand_impl(const FactorForm& f, const Truncation& t, CoefficientOf coefficient_of) {
  const std::size_t r = f.variables();
  Series<R> result = Series<R>::constant(r, t, R(Integer(1)));
  for (const auto& [key, e] : f.factors()) {
    Series<R> factor(r, t);
    Monomial m(r, 0);
    for (unsigned long l = 0;; ++l) {
      for (std::size_t i = 0; i < r; ++i) m[i] = static_cast<int>(l) * key.k[i];
      if (!t.admits(m)) break;
      Integer b = binomial_series_coefficient(e, l);
      if (e >= 0 && l > static_cast<unsigned long>(e)) break;
      factor.add_term(m, coefficient_of(key, l, b));
    }
    result = result * factor;
  }
  return result;
}

}  // namespace

IntSeries expand(const FactorForm& f, const Truncation& t) {
  if (f.tagged()) throw MathError(ErrorKind::InvalidInput, "character-tagged factors need expand_equivariant");
  return expand_impl<Integer>(f, t, [](const FactorKey&, unsigned long, const Integer& b) { return b; });
}

IntSeries expand(const FactorForm& f, int total) { return expand(f, Truncation{total, std::nullopt}); }

EquivariantSeries expand_equivariant(const FactorForm& f, const Truncation& t) {
  return expand_impl<GroupRingElement>(f, t, [](const FactorKey& key, unsigned long l, const Integer& b) {
    Character chi = key.tag ? key.tag->pow(static_cast<long>(l)) : Character{};
    return GroupRingElement(chi, b);
  });
}

FactorForm substitute(const FactorForm& f, const MonomialMap& images) {
  if (images.size() != f.variables()) throw MathError(ErrorKind::DimensionMismatch, "substitution map has wrong length");
  const std::size_t n = images.empty() ? 0 : images[0].size();
  for (const auto& img : images)
    if (img.size() != n) throw MathError(ErrorKind::DimensionMismatch, "image monomials of different lengths");
  FactorForm out(n);
  for (const auto& [key, e] : f.factors()) {
    Monomial m(n, 0);
    for (std::size_t i = 0; i < key.k.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m[j] += key.k[i] * images[i][j];
    if (degree(m) == 0) throw MathError(ErrorKind::InvalidInput, "substitution sends a factor to (1 - 1)");
    out.multiply(m, e, key.tag);
  }
  return out;
}

MonomialMap identify_map(std::size_t variables) { return MonomialMap(variables, Monomial{1}); }

FactorForm identify_variables(const FactorForm& f) {
  if (f.variables() == 0) return FactorForm(1);
  return substitute(f, identify_map(f.variables()));
}

IntSeries one_minus_t(int total) {
  IntSeries s(1, total);
  s.add_term({0}, 1);
  s.add_term({1}, -1);
  return s;
}

std::vector<std::string> default_variable_names(std::size_t variables, const std::string& stem) {
  if (variables == 1) return {stem};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < variables; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << ' ';
    os << names.at(i);
    if (m[i] != 1) os << '^' << m[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string to_text(const FactorForm& f, const std::vector<std::string>& names, std::size_t tag_width) {
  if (f.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : f.factors()) {
    if (!first) os << ' ';
    os << "(1 - ";
    if (key.tag) os << key.tag->to_string(tag_width) << ' ';
    os << monomial_text(key.k, names) << ')';
    if (e != 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

namespace {

template <class R, class Render>
std::string series_text(const Series<R>& s, const std::vector<std::string>& names, Render render) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool constant = degree(m) == 0;
    os << render(c, constant, first);
    if (!constant) os << monomial_text(m, names);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_text(const IntSeries& s, const std::vector<std::string>& names) {
  return series_text(s, names, [](const Integer& c, bool constant, bool first) {
    std::string out;
    if (first) out = c < 0 ? "-" : "";
    else out = c < 0 ? " - " : " + ";
    Integer a = abs(c);
    if (constant) out += a.get_str();
    else if (a != 1) out += a.get_str() + " ";
    return out;
  });
}

std::string to_text(const EquivariantSeries& s, const std::vector<std::string>& names, std::size_t tag_width) {
  return series_text(s, names, [&](const GroupRingElement& c, bool constant, bool first) {
    std::string out = first ? "" : " + ";
    out += "(" + c.to_string(tag_width) + ")";
    if (!constant) out += " ";
    return out;
  });
}

}  // namespace singpoincare
