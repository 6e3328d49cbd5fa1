#pragma once

// Equivariant series over the characters of H = coker(-E) for a rational
// surface singularity.

#include <map>
#include <string>
#include <vector>

#include "singpoincare/poincare_engine.hpp"
#include "singpoincare/power_series.hpp"
#include "singpoincare/resolution_graph.hpp"

namespace singpoincare {

struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;  // nontrivial ones only, d_1 | d_2 | ...
  /// Row i sends e_sigma to the coordinate of h_sigma in Z/d_i.
  IntMatrix projection;
  std::vector<std::string> ids;

  Integer order() const;
  /// Coordinates of h_sigma, reduced modulo the invariant factors.
  std::vector<Integer> coordinates(const std::string& sigma) const;
};

/// Invariant-factor presentation of coker(-E) from the Smith form.
FiniteAbelianGroup group_from_linking(const LinkingData& ld);

/// alpha_sigma(h_delta) = exp(-2 pi i m_{sigma delta}), stored as -m mod 1 on
/// the generators h_delta in component order. Each character is checked to
/// vanish on the relations. Errors: NotWellDefined.
std::map<std::string, Character> characters_from_linking(const ResolutionGraph& g, const LinkingData& ld);

/// prod_sigma (1 - alpha_sigma t^{d k_sigma})^{-chi_sigma}. Errors: DimensionMismatch.
FactorForm equivariant_poincare(const ResolutionGraph& g, const EulerData& euler, const LinkingData& ld,
                                const KVectors& k);

/// Coefficients of the trivial character, with every exponent divided by d.
/// Errors: NotDivisible.
IntSeries invariant_part(const EquivariantSeries& s, const Integer& d);

}  // namespace singpoincare
