#pragma once

// One-dimensional characters of a finite abelian group H generated by the
// classes h_sigma, stored by their values on the generators as elements of
// Q/Z: the value exp(2 pi i q) is encoded by q in [0, 1). The integer group
// ring Z[H^] over these characters is all of R(H) since H is abelian.

#include <map>
#include <string>
#include <vector>

#include "singpoincare/exact_linalg.hpp"

namespace singpoincare {

class Character {
 public:
  Character() = default;  // trivial
  explicit Character(std::vector<Rational> values);

  /// Values on the generators, reduced to [0, 1), trailing zeros dropped.
  const std::vector<Rational>& values() const noexcept { return values_; }
  Rational value(std::size_t generator) const;
  bool trivial() const noexcept { return values_.empty(); }

  Character operator*(const Character& other) const;
  Character pow(long exponent) const;
  /// Smallest n > 0 with chi^n trivial.
  Integer order() const;

  /// "[1/2]" or "[1/3,2/3]"; padded with zeros to `width` generators.
  std::string to_string(std::size_t width = 0) const;

  friend auto operator<=>(const Character& a, const Character& b) { return a.values_ <=> b.values_; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::vector<Rational> values_;
};

class GroupRingElement {
 public:
  GroupRingElement() = default;  // zero
  explicit GroupRingElement(const Integer& n);
  GroupRingElement(const Character& chi, const Integer& n);

  static GroupRingElement one() { return GroupRingElement(Integer(1)); }

  const std::map<Character, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Character& chi) const;
  /// Coefficient of the trivial representation.
  Integer invariant() const { return coefficient(Character{}); }

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Integer& n, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string(std::size_t width = 0) const;

 private:
  std::map<Character, Integer> terms_;
};

inline bool is_zero(const Integer& z) { return z == 0; }
inline bool is_zero(const GroupRingElement& g) { return g.is_zero(); }

}  // namespace singpoincare
