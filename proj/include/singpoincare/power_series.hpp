#pragma once

// Sparse truncated multivariate power series over a commutative coefficient
// ring, and products of binomial factors (1 - chi t^k)^e kept exactly.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singpoincare/errors.hpp"
#include "singpoincare/exact_linalg.hpp"
#include "singpoincare/group_ring.hpp"

namespace singpoincare {

using Monomial = std::vector<int>;

int degree(const Monomial& m);

/// Terms are kept iff total degree <= total and, when a box is set, every
/// exponent is within it.
struct Truncation {
  int total = 0;
  std::optional<std::vector<int>> box;

  bool admits(const Monomial& m) const;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

template <class R>
class Series {
 public:
  using Coefficient = R;

  Series(std::size_t variables, Truncation truncation) : r_(variables), trunc_(std::move(truncation)) {
    if (trunc_.box && trunc_.box->size() != r_) throw MathError(ErrorKind::DimensionMismatch, "box length differs from variable count");
  }
  Series(std::size_t variables, int total) : Series(variables, Truncation{total, std::nullopt}) {}

  static Series constant(std::size_t variables, Truncation truncation, R value) {
    Series s(variables, std::move(truncation));
    s.add_term(Monomial(variables, 0), std::move(value));
    return s;
  }

  std::size_t variables() const noexcept { return r_; }
  const Truncation& truncation() const noexcept { return trunc_; }
  const std::map<Monomial, R>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  R coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R{} : it->second;
  }

  /// Adds c * t^m; ignores monomials outside the truncation.
  void add_term(const Monomial& m, const R& c) {
    if (m.size() != r_) throw MathError(ErrorKind::DimensionMismatch, "monomial length differs from variable count");
    if (!trunc_.admits(m) || singpoincare::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (singpoincare::is_zero(it->second)) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series out(a.r_, a.trunc_);
    Monomial m(a.r_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.r_; ++i) m[i] = ma[i] + mb[i];
        if (!out.trunc_.admits(m)) continue;
        out.add_term(m, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.r_ == b.r_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// Same series with a smaller truncation.
  Series truncated(const Truncation& t) const {
    Series out(r_, t);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

 private:
  void check_compatible(const Series& other) const {
    if (r_ != other.r_ || !(trunc_ == other.trunc_))
      throw MathError(ErrorKind::DimensionMismatch, "series with different variable count or truncation");
  }

  std::size_t r_;
  Truncation trunc_;
  std::map<Monomial, R> terms_;
};

using IntSeries = Series<Integer>;
using EquivariantSeries = Series<GroupRingElement>;

struct FactorKey {
  Monomial k;
  std::optional<Character> tag;  // absent == trivial character

  friend auto operator<=>(const FactorKey&, const FactorKey&) = default;
  friend bool operator==(const FactorKey&, const FactorKey&) = default;
};

/// prod (1 - chi * t^k)^e over a canonical map of factors: keys nonzero,
/// exponents nonzero, duplicate keys merged, trivial tags dropped.
class FactorForm {
 public:
  explicit FactorForm(std::size_t variables) : r_(variables) {}

  std::size_t variables() const noexcept { return r_; }
  const std::map<FactorKey, long>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  bool tagged() const;

  /// Multiplies by (1 - tag * t^k)^exponent.
  void multiply(const Monomial& k, long exponent, const std::optional<Character>& tag = std::nullopt);
  void multiply(const FactorForm& other);

  friend bool operator==(const FactorForm&, const FactorForm&) = default;

 private:
  std::size_t r_;
  std::map<FactorKey, long> factors_;
};

/// Coefficient of x^l in (1 - x)^e, i.e. (-1)^l binom(e, l); for e = -c < 0
/// this is binom(c + l - 1, l).
Integer binomial_series_coefficient(long e, unsigned long l);

/// Multiplies the factors out up to the truncation. Throws InvalidInput for a
/// tagged form.
IntSeries expand(const FactorForm& f, const Truncation& t);
IntSeries expand(const FactorForm& f, int total);

/// Expansion over Z[H^]: the l-th term of (1 - chi t^k)^e carries chi^l.
EquivariantSeries expand_equivariant(const FactorForm& f, const Truncation& t);

/// Variable i maps to the monomial images[i] in the new variables.
using MonomialMap = std::vector<Monomial>;

FactorForm substitute(const FactorForm& f, const MonomialMap& images);

template <class R>
struct SubstitutedSeries {
  Series<R> series;
  int guaranteed_total;  // all terms of total degree <= this are exact
  bool truncation_loss;  // guaranteed_total below the requested truncation
};

/// Remaps monomials into a series truncated at `total`. Every image must have
/// positive degree.
template <class R>
SubstitutedSeries<R> substitute(const Series<R>& s, const MonomialMap& images, int total, std::size_t new_variables) {
  if (images.size() != s.variables()) throw MathError(ErrorKind::DimensionMismatch, "substitution map has wrong length");
  long guaranteed = std::numeric_limits<long>::max();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != new_variables) throw MathError(ErrorKind::DimensionMismatch, "image monomial has wrong length");
    const int d = degree(images[i]);
    if (d == 0) throw MathError(ErrorKind::InvalidInput, "series substitution with a degree-zero image");
    guaranteed = std::min(guaranteed, static_cast<long>(s.truncation().total + 1) * d - 1);
    if (s.truncation().box) guaranteed = std::min(guaranteed, static_cast<long>((*s.truncation().box)[i] + 1) * d - 1);
  }
  Series<R> out(new_variables, Truncation{total, std::nullopt});
  Monomial m(new_variables);
  for (const auto& [src, c] : s.terms()) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < new_variables; ++j) m[j] += src[i] * images[i][j];
    out.add_term(m, c);
  }
  const int g = static_cast<int>(std::min<long>(guaranteed, total));
  return {std::move(out), g, g < total};
}

/// All variables mapped to the single variable t.
MonomialMap identify_map(std::size_t variables);
FactorForm identify_variables(const FactorForm& f);

/// (1 - t) as a one-variable series.
IntSeries one_minus_t(int total);

std::vector<std::string> default_variable_names(std::size_t variables, const std::string& stem = "t");

/// "(1 - t1 t2^2)^-1 (1 - [1/2] t^2)^-2"; the empty product renders as "1".
std::string to_text(const FactorForm& f, const std::vector<std::string>& names, std::size_t tag_width = 0);
/// Terms sorted lexicographically by exponent vector, e.g. "1 - t + t^2".
std::string to_text(const IntSeries& s, const std::vector<std::string>& names);
std::string to_text(const EquivariantSeries& s, const std::vector<std::string>& names, std::size_t tag_width = 0);
std::string monomial_text(const Monomial& m, const std::vector<std::string>& names);

}  // namespace singpoincare
