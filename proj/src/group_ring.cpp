#include "singpoincare/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace singpoincare {

namespace {

Rational frac(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace

Character::Character(std::vector<Rational> values) : values_(std::move(values)) {
  for (auto& v : values_) v = frac(v);
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

Rational Character::value(std::size_t generator) const {
  return generator < values_.size() ? values_[generator] : Rational(0);
}

Character Character::operator*(const Character& other) const {
  std::vector<Rational> v(std::max(values_.size(), other.values_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = value(i) + other.value(i);
  return Character(std::move(v));
}

Character Character::pow(long exponent) const {
  std::vector<Rational> v = values_;
  for (auto& q : v) q *= exponent;
  return Character(std::move(v));
}

Integer Character::order() const {
  Integer n = 1;
  for (const auto& q : values_) n = lcm(n, Integer(q.get_den()));
  return n;
}

std::string Character::to_string(std::size_t width) const {
  std::ostringstream os;
  os << '[';
  const std::size_t n = std::max<std::size_t>({width, values_.size(), 1});
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << value(i).get_str();
  os << ']';
  return os.str();
}

GroupRingElement::GroupRingElement(const Integer& n) : GroupRingElement(Character{}, n) {}

GroupRingElement::GroupRingElement(const Character& chi, const Integer& n) {
  if (n != 0) terms_.emplace(chi, n);
}

Integer GroupRingElement::coefficient(const Character& chi) const {
  auto it = terms_.find(chi);
  return it == terms_.end() ? Integer(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [chi, n] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(chi, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  return *this += Integer(-1) * other;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [ca, na] : a.terms_)
    for (const auto& [cb, nb] : b.terms_) out += GroupRingElement(ca * cb, na * nb);
  return out;
}

GroupRingElement operator*(const Integer& n, const GroupRingElement& a) {
  GroupRingElement out;
  if (n == 0) return out;
  for (const auto& [chi, m] : a.terms_) out.terms_.emplace(chi, n * m);
  return out;
}

std::string GroupRingElement::to_string(std::size_t width) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [chi, n] : terms_) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << '-';
    Integer a = abs(n);
    if (a != 1) os << a.get_str() << ' ';
    os << chi.to_string(width);
    first = false;
  }
  return os.str();
}

}  // namespace singpoincare
