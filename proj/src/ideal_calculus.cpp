#include "singpoincare/ideal_calculus.hpp"

#include <algorithm>

namespace singpoincare {

bool IdealPresentation::trivial() const {
  return std::all_of(divisorial.begin(), divisorial.end(), [](const auto& kv) { return kv.second == 0; }) &&
         std::all_of(curves.begin(), curves.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

const std::string& arrow_component(const ResolutionGraph& g, const std::string& label) {
  for (const auto& a : g.arrows)
    if (a.label == label) return a.component;
  throw MathError(ErrorKind::UnknownBranch, "no branch '" + label + "'");
}

int exponent_int(const Rational& q, const std::string& where) {
  if (q.get_den() != 1) throw MathError(ErrorKind::NotIntegral, where + " has non-integral exponent " + q.get_str());
  if (!q.get_num().fits_sint_p()) throw MathError(ErrorKind::InvalidInput, where + " exponent too large");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

void validate(const IdealPresentation& ip, const ResolutionGraph& g, GraphMode mode) {
  for (const auto& [sigma, r] : ip.divisorial) {
    g.index_of(sigma);
    if (r < 0) throw MathError(ErrorKind::InvalidInput, ip.name + ": negative exponent at " + sigma);
    if (mode == GraphMode::PlaneCurve && r.get_den() != 1)
      throw MathError(ErrorKind::NotIntegral, ip.name + ": exponent at " + sigma + " must be an integer");
  }
  for (const auto& [branch, m] : ip.curves) {
    arrow_component(g, branch);
    if (m < 0) throw MathError(ErrorKind::InvalidInput, ip.name + ": negative exponent at " + branch);
  }
  if (mode == GraphMode::RationalSingularity) {
    const IntMatrix e = g.intersection_matrix();
    for (std::size_t d = 0; d < g.size(); ++d) {
      Rational sum = 0;
      for (const auto& [sigma, r] : ip.divisorial) sum += e.at(g.index_of(sigma), d) * r;
      if (sum.get_den() != 1)
        throw MathError(ErrorKind::NotIntegral,
                        ip.name + ": the divisor does not meet " + g.components[d].id + " integrally");
    }
  }
}

std::vector<Rational> divisorial_exponents_from_multiplicities(const LinkingData& ld, const std::vector<Integer>& k) {
  if (k.size() != ld.ids.size())
    throw MathError(ErrorKind::DimensionMismatch, "multiplicity vector length differs from component count");
  std::vector<Rational> n(k.size(), Rational(0));
  for (std::size_t s = 0; s < k.size(); ++s)
    for (std::size_t d = 0; d < k.size(); ++d) n[s] += ld.m.at(s, d) * k[d];
  return n;
}

std::vector<Rational> multiplicities_of(const IdealPresentation& ip, const ResolutionGraph& g, const LinkingData& ld) {
  std::vector<Rational> k(g.size(), Rational(0));
  auto add_column = [&](std::size_t col, const Rational& w) {
    for (std::size_t s = 0; s < g.size(); ++s) k[s] += ld.m.at(s, col) * w;
  };
  for (const auto& [sigma, r] : ip.divisorial) add_column(g.index_of(sigma), r);
  for (const auto& [branch, m] : ip.curves) add_column(g.index_of(arrow_component(g, branch)), Rational(m));
  return k;
}

FactorForm poincare_of_ideal_set(const std::vector<IdealPresentation>& ips, const MixedBase& base) {
  const std::size_t r = ips.size();
  if (r == 0) throw MathError(ErrorKind::DimensionMismatch, "no ideals");
  for (const auto& ip : ips) {
    for (const auto& [sigma, n] : ip.divisorial)
      if (n != 0 && std::find(base.components.begin(), base.components.end(), sigma) == base.components.end())
        throw MathError(ErrorKind::UnknownComponent, ip.name + ": component " + sigma + " is not a base variable");
    for (const auto& [branch, m] : ip.curves)
      if (m != 0 && std::find(base.branches.begin(), base.branches.end(), branch) == base.branches.end())
        throw MathError(ErrorKind::UnknownBranch, ip.name + ": branch " + branch + " is not a base variable");
  }

  MonomialMap images;
  for (const auto& sigma : base.components) {
    Monomial img(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      auto it = ips[i].divisorial.find(sigma);
      if (it != ips[i].divisorial.end()) img[i] = exponent_int(it->second, ips[i].name + " at " + sigma);
    }
    images.push_back(std::move(img));
  }
  for (const auto& branch : base.branches) {
    Monomial img(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      auto it = ips[i].curves.find(branch);
      if (it != ips[i].curves.end()) img[i] = exponent_int(Rational(it->second), ips[i].name + " at " + branch);
    }
    if (degree(img) == 0)
      throw MathError(ErrorKind::HypothesisViolated, "branch " + branch + " has exponent 0 in every ideal");
    images.push_back(std::move(img));
  }
  if (images.size() != base.form.variables())
    throw MathError(ErrorKind::DimensionMismatch, "base variables do not match its component and branch lists");
  return substitute(base.form, images);
}

FactorForm poincare_of_ideal(const IdealPresentation& ip, const MixedBase& base) {
  if (ip.trivial()) return FactorForm(1);
  return poincare_of_ideal_set({ip}, base);
}

FactorForm dsigma_rescale(const FactorForm& f, const Integer& d) {
  if (d <= 0 || !d.fits_sint_p()) throw MathError(ErrorKind::InvalidInput, "bad rescaling factor");
  MonomialMap images(f.variables(), Monomial(f.variables(), 0));
  for (std::size_t i = 0; i < f.variables(); ++i) images[i][i] = static_cast<int>(d.get_si());
  return substitute(f, images);
}

}  // namespace singpoincare
