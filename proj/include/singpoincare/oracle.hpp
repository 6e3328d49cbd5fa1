#pragma once

// Brute-force Poincare series of curve and divisorial filtrations on C^2 from
// jets of functions. Depends only on exact linear algebra and on branch
// parametrizations; the product formulas are not used here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singpoincare/curve_resolver.hpp"
#include "singpoincare/power_series.hpp"

namespace singpoincare {

/// One index of the filtration: the order along a branch, or a divisorial
/// valuation realized as the minimum over several generic curvettes.
struct RealizedIndex {
  std::string label;
  bool divisorial = false;
  std::vector<PuiseuxBranch> realizations;
  std::vector<Rational> seeds;  // curvette seeds, divisorial only
};

struct ValuationRealization {
  std::vector<RealizedIndex> indices;
};

RealizedIndex curve_index(const PuiseuxBranch& branch);

/// Curvettes at sigma with the given (distinct, non-special) seeds.
/// Errors: SeedNotGeneric, InvalidInput (repeated seed).
RealizedIndex divisorial_index(const ResolvedCurve& rc, const std::string& sigma, const std::vector<Rational>& seeds);

/// `count` distinct seeds p/q avoiding the special slopes of E_sigma, drawn from
/// a generator seeded with `stream`.
std::vector<Rational> generic_seeds(const ResolvedCurve& rc, const std::string& sigma, std::size_t count,
                                    std::uint64_t stream);

/// Jet evaluation table: monomials x^a y^b against the t-jets of every
/// realization, built once up to per-index precisions.
class JetTable {
 public:
  JetTable(const ValuationRealization& vr, std::vector<int> precision);

  /// dim O / J(w) for w below the table precision. Errors: InvalidInput.
  std::size_t codim(const std::vector<int>& w) const;
  const std::vector<int>& precision() const noexcept { return precision_; }

 private:
  std::vector<int> precision_;
  std::size_t monomials_ = 0;
  // blocks_[i][j] : coefficients of t^0..t^{precision_i - 1} for realization j of index i, per monomial
  std::vector<std::vector<std::vector<std::vector<Rational>>>> blocks_;
};

/// h(w) = dim O / {g : v_i(g) >= w_i for all i}.
std::size_t codim(const ValuationRealization& vr, const std::vector<int>& w);

/// Coefficients sum_{S} (-1)^{|S|+1} h(v + 1_S) for v inside the box (and of
/// total degree at most `total` when given).
IntSeries poincare_bruteforce(const ValuationRealization& vr, const std::vector<int>& box,
                              std::optional<int> total = std::nullopt);

/// A filtration index as requested by a caller before realization.
struct OracleIndex {
  bool divisorial = false;
  std::string ref;  // component id or branch name
};

struct AgreementReport {
  IntSeries series{0, 0};
  std::size_t families = 0;
  std::vector<std::vector<Rational>> seeds;  // first family, per divisorial index
};

/// Runs the brute force once per seed family (each divisorial index gets
/// box_i + 1 curvettes per family) and requires identical results.
/// Errors: SeedsDisagree, UnknownBranch, UnknownComponent.
AgreementReport check_divisorial(const ResolvedCurve& rc, const std::vector<OracleIndex>& indices,
                                 const std::vector<int>& box, std::optional<int> total = std::nullopt,
                                 std::size_t families = 3, std::uint64_t stream = 0);

/// Same with caller-chosen seeds: seed_families[f][i] lists the seeds used for
/// divisorial index i (in order of appearance) in family f.
AgreementReport check_divisorial(const ResolvedCurve& rc, const std::vector<OracleIndex>& indices,
                                 const std::vector<int>& box, std::optional<int> total,
                                 const std::vector<std::vector<std::vector<Rational>>>& seed_families);

}  // namespace singpoincare
