#include "singpoincare/equivariant.hpp"

namespace singpoincare {

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::vector<Integer> FiniteAbelianGroup::coordinates(const std::string& sigma) const {
  std::size_t col = ids.size();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == sigma) col = i;
  if (col == ids.size()) throw MathError(ErrorKind::UnknownComponent, "no component '" + sigma + "'");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), projection.at(i, col).get_mpz_t(), invariant_factors[i].get_mpz_t());
    out.push_back(c);
  }
  return out;
}

FiniteAbelianGroup group_from_linking(const LinkingData& ld) {
  // left (-E) right = D, so coker(-E) = Z^n / Im(-E) maps isomorphically onto
  // Z^n / Im(D) through x -> left x.
  const SmithForm& s = ld.smith;
  FiniteAbelianGroup h;
  h.ids = ld.ids;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 1) {
      if (s.diagonal[i] == 0) throw MathError(ErrorKind::SingularIntersectionMatrix, "infinite cokernel");
      rows.push_back(i);
      h.invariant_factors.push_back(s.diagonal[i]);
    }
  h.projection = IntMatrix(rows.size(), s.cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < s.cols; ++c) h.projection.at(r, c) = s.left.at(rows[r], c);
  return h;
}

std::map<std::string, Character> characters_from_linking(const ResolutionGraph& g, const LinkingData& ld) {
  const IntMatrix e = g.intersection_matrix();
  const std::size_t n = ld.ids.size();
  std::map<std::string, Character> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Rational> q(n);
    for (std::size_t d = 0; d < n; ++d) q[d] = -ld.m.at(s, d);
    // Relations: sum_delta (-E)_{delta gamma} h_delta = 0 for every gamma.
    for (std::size_t c = 0; c < n; ++c) {
      Rational pairing = 0;
      for (std::size_t d = 0; d < n; ++d) pairing -= q[d] * e.at(d, c);
      if (pairing.get_den() != 1)
        throw MathError(ErrorKind::NotWellDefined, "character of " + ld.ids[s] + " does not vanish on relations");
    }
    out.emplace(ld.ids[s], Character(std::move(q)));
  }
  return out;
}

FactorForm equivariant_poincare(const ResolutionGraph& g, const EulerData& euler, const LinkingData& ld,
                                const KVectors& k) {
  if (k.size() != g.size())
    throw MathError(ErrorKind::DimensionMismatch, "one k-vector per component expected");
  if (!ld.d.fits_sint_p()) throw MathError(ErrorKind::InvalidInput, "determinant too large");
  const int d = static_cast<int>(ld.d.get_si());
  const auto alpha = characters_from_linking(g, ld);
  const std::size_t r = k.empty() ? 0 : k[0].size();
  FactorForm f(r);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (k[s].size() != r) throw MathError(ErrorKind::DimensionMismatch, "k-vectors of different lengths");
    Monomial key = k[s];
    bool zero = true;
    for (auto& v : key) {
      zero = zero && v == 0;
      v *= d;
    }
    const int chi = euler.chi.at(g.components[s].id);
    if (zero || chi == 0) continue;
    f.multiply(key, -chi, alpha.at(g.components[s].id));
  }
  return f;
}

IntSeries invariant_part(const EquivariantSeries& s, const Integer& d) {
  if (d <= 0 || !d.fits_sint_p()) throw MathError(ErrorKind::InvalidInput, "bad rescaling factor");
  const int n = static_cast<int>(d.get_si());
  Truncation t{s.truncation().total / n, std::nullopt};
  if (s.truncation().box) {
    std::vector<int> box = *s.truncation().box;
    for (auto& b : box) b /= n;
    t.box = std::move(box);
  }
  IntSeries out(s.variables(), t);
  for (const auto& [m, c] : s.terms()) {
    Monomial q = m;
    for (auto& v : q) {
      if (v % n != 0)
        throw MathError(ErrorKind::NotDivisible, "exponent " + std::to_string(v) + " is not a multiple of " + d.get_str());
      v /= n;
    }
    out.add_term(q, c.invariant());
  }
  return out;
}

}  // namespace singpoincare
