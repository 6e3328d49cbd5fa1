#include "singpoincare/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace singpoincare {

namespace {

using Jet = std::vector<Rational>;

Jet truncated_poly(const UniPoly& p, int precision) {
  Jet j(static_cast<std::size_t>(precision), Rational(0));
  for (std::size_t i = 0; i < p.size() && i < j.size(); ++i) j[i] = p[i];
  return j;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  Jet c(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Monomials x^a y^b of total degree < bound, ordered by degree then a.
std::vector<std::pair<int, int>> monomial_basis(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int deg = 0; deg < bound; ++deg)
    for (int a = deg; a >= 0; --a) out.emplace_back(a, deg - a);
  return out;
}

std::size_t basis_size(int bound) { return static_cast<std::size_t>(bound) * static_cast<std::size_t>(bound + 1) / 2; }

const PuiseuxBranch& find_branch(const ResolvedCurve& rc, const std::string& name) {
  for (const auto& b : rc.branches)
    if (b.name == name) return b;
  throw MathError(ErrorKind::UnknownBranch, "no branch '" + name + "'");
}

}  // namespace

RealizedIndex curve_index(const PuiseuxBranch& branch) {
  validate_branch(branch);
  return {branch.name, false, {branch}, {}};
}

RealizedIndex divisorial_index(const ResolvedCurve& rc, const std::string& sigma, const std::vector<Rational>& seeds) {
  RealizedIndex idx{sigma, true, {}, seeds};
  std::set<Rational> seen;
  for (const auto& s : seeds) {
    if (!seen.insert(s).second) throw MathError(ErrorKind::InvalidInput, "repeated curvette seed " + s.get_str());
    idx.realizations.push_back(curvette(rc, sigma, s, "L_" + sigma + "_" + s.get_str()));
  }
  if (idx.realizations.empty()) throw MathError(ErrorKind::InvalidInput, "divisorial index without curvettes");
  return idx;
}

std::vector<Rational> generic_seeds(const ResolvedCurve& rc, const std::string& sigma, std::size_t count,
                                    std::uint64_t stream) {
  const auto special = special_slopes(rc, sigma);
  std::mt19937_64 rng(stream);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 11);
  std::set<Rational> chosen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (std::find(special.begin(), special.end(), q) != special.end()) continue;
    if (chosen.insert(q).second) out.push_back(q);
  }
  return out;
}

JetTable::JetTable(const ValuationRealization& vr, std::vector<int> precision) : precision_(std::move(precision)) {
  if (precision_.size() != vr.indices.size())
    throw MathError(ErrorKind::DimensionMismatch, "one precision per filtration index expected");
  const int bound = precision_.empty() ? 0 : *std::max_element(precision_.begin(), precision_.end());
  const auto basis = monomial_basis(bound);
  monomials_ = basis.size();
  for (std::size_t i = 0; i < vr.indices.size(); ++i) {
    const int p = precision_[i];
    std::vector<std::vector<std::vector<Rational>>> per_realization;
    for (const auto& phi : vr.indices[i].realizations) {
      const UniPoly xp = phi.x_poly(), yp = phi.y_poly();
      if ((!xp.empty() && xp[0] != 0) || (!yp.empty() && yp[0] != 0))
        throw MathError(ErrorKind::InvalidInput, "realization '" + phi.name + "' does not pass through the origin");
      const Jet x = truncated_poly(xp, p), y = truncated_poly(yp, p);
      std::vector<Jet> xpow{truncated_poly({1}, p)}, ypow{truncated_poly({1}, p)};
      for (int e = 1; e < bound; ++e) {
        xpow.push_back(jet_mul(xpow.back(), x));
        ypow.push_back(jet_mul(ypow.back(), y));
      }
      std::vector<std::vector<Rational>> rows;
      rows.reserve(basis.size());
      for (auto [a, b] : basis) rows.push_back(jet_mul(xpow[static_cast<std::size_t>(a)], ypow[static_cast<std::size_t>(b)]));
      per_realization.push_back(std::move(rows));
    }
    blocks_.push_back(std::move(per_realization));
  }
}

std::size_t JetTable::codim(const std::vector<int>& w) const {
  if (w.size() != precision_.size()) throw MathError(ErrorKind::DimensionMismatch, "weight vector has wrong length");
  int bound = 0;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > precision_[i]) throw MathError(ErrorKind::InvalidInput, "weight outside the jet table");
    bound = std::max(bound, w[i]);
    cols += blocks_[i].size() * static_cast<std::size_t>(w[i]);
  }
  // Monomials of degree >= max w lie in J(w) because v(x), v(y) >= 1.
  const std::size_t rows = basis_size(bound);
  if (rows == 0 || cols == 0) return 0;
  RatMatrix m(rows, cols);
  std::size_t c0 = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& block : blocks_[i]) {
      for (std::size_t r = 0; r < rows; ++r)
        for (int k = 0; k < w[i]; ++k) m.at(r, c0 + static_cast<std::size_t>(k)) = block[r][static_cast<std::size_t>(k)];
      c0 += static_cast<std::size_t>(w[i]);
    }
  return rank(std::move(m));
}

std::size_t codim(const ValuationRealization& vr, const std::vector<int>& w) {
  return JetTable(vr, w).codim(w);
}

IntSeries poincare_bruteforce(const ValuationRealization& vr, const std::vector<int>& box, std::optional<int> total) {
  const std::size_t r = vr.indices.size();
  if (box.size() != r) throw MathError(ErrorKind::DimensionMismatch, "box length differs from index count");
  int box_total = 0;
  for (int b : box) {
    if (b < 0) throw MathError(ErrorKind::InvalidInput, "negative box bound");
    box_total += b;
  }
  Truncation trunc{total ? std::min(*total, box_total) : box_total, box};
  std::vector<int> precision = box;
  for (auto& p : precision) ++p;
  const JetTable table(vr, precision);

  std::map<std::vector<int>, std::size_t> memo;
  auto h = [&](const std::vector<int>& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    return memo.emplace(w, table.codim(w)).first->second;
  };

  IntSeries out(r, trunc);
  std::vector<int> v(r, 0);
  for (;;) {
    if (trunc.admits(v)) {
      Integer c = 0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<int> w = v;
        int size = 0;
        for (std::size_t i = 0; i < r; ++i)
          if (mask & (std::size_t{1} << i)) {
            ++w[i];
            ++size;
          }
        const Integer hw(static_cast<unsigned long>(h(w)));
        if (size % 2) c += hw;
        else c -= hw;
      }
      if (c < 0) throw std::logic_error("negative oracle coefficient");
      out.add_term(v, c);
    }
    std::size_t i = 0;
    while (i < r && v[i] == box[i]) v[i++] = 0;
    if (i == r) break;
    ++v[i];
  }
  return out;
}

namespace {

ValuationRealization realize(const ResolvedCurve& rc, const std::vector<OracleIndex>& indices,
                             const std::vector<std::vector<Rational>>& family) {
  ValuationRealization vr;
  std::size_t d = 0;
  for (const auto& idx : indices) {
    if (idx.divisorial) vr.indices.push_back(divisorial_index(rc, idx.ref, family.at(d++)));
    else vr.indices.push_back(curve_index(find_branch(rc, idx.ref)));
  }
  return vr;
}

std::string describe_difference(const IntSeries& a, const IntSeries& b) {
  std::set<Monomial> keys;
  for (const auto& [m, c] : a.terms()) keys.insert(m);
  for (const auto& [m, c] : b.terms()) keys.insert(m);
  for (const auto& m : keys)
    if (a.coefficient(m) != b.coefficient(m)) {
      std::string where;
      for (int e : m) where += (where.empty() ? "" : ",") + std::to_string(e);
      return "coefficient at (" + where + "): " + a.coefficient(m).get_str() + " vs " + b.coefficient(m).get_str();
    }
  return "series differ";
}

}  // namespace

AgreementReport check_divisorial(const ResolvedCurve& rc, const std::vector<OracleIndex>& indices,
                                 const std::vector<int>& box, std::optional<int> total,
                                 const std::vector<std::vector<std::vector<Rational>>>& seed_families) {
  if (box.size() != indices.size()) throw MathError(ErrorKind::DimensionMismatch, "box length differs from index count");
  const bool any_divisorial = std::any_of(indices.begin(), indices.end(), [](const auto& i) { return i.divisorial; });
  AgreementReport report;
  if (!any_divisorial || seed_families.empty()) {
    report.series = poincare_bruteforce(realize(rc, indices, {}), box, total);
    report.families = any_divisorial ? 0 : 1;
    return report;
  }
  for (std::size_t f = 0; f < seed_families.size(); ++f) {
    IntSeries s = poincare_bruteforce(realize(rc, indices, seed_families[f]), box, total);
    if (f == 0) {
      report.series = std::move(s);
      report.seeds = seed_families[0];
    } else if (!(s == report.series)) {
      throw MathError(ErrorKind::SeedsDisagree,
                      "seed family " + std::to_string(f + 1) + " disagrees with family 1: " + describe_difference(report.series, s));
    }
  }
  report.families = seed_families.size();
  return report;
}

AgreementReport check_divisorial(const ResolvedCurve& rc, const std::vector<OracleIndex>& indices,
                                 const std::vector<int>& box, std::optional<int> total, std::size_t families,
                                 std::uint64_t stream) {
  if (box.size() != indices.size()) throw MathError(ErrorKind::DimensionMismatch, "box length differs from index count");
  std::vector<std::vector<std::vector<Rational>>> seed_families(families);
  for (std::size_t f = 0; f < families; ++f)
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (indices[i].divisorial) {
        const std::uint64_t s = stream * 1000003u + f * 7919u + i;
        seed_families[f].push_back(generic_seeds(rc, indices[i].ref, static_cast<std::size_t>(box[i]) + 1, s));
      }
  return check_divisorial(rc, indices, box, total, seed_families);
}

}  // namespace singpoincare
