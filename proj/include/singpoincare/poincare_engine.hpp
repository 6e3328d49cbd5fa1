#pragma once

// Product formulas for the Poincare series of multi-index filtrations on a
// resolution: prod_sigma (1 - t^{k_sigma})^{-chi(E_sigma smooth part)}.

#include <string>
#include <vector>

#include "singpoincare/curve_resolver.hpp"
#include "singpoincare/power_series.hpp"
#include "singpoincare/resolution_graph.hpp"

namespace singpoincare {

/// k_sigma in Z^r for every component, in component order.
using KVectors = std::vector<Monomial>;

/// Builds k-vectors from named ideal specs of the graph (one index per name).
/// Errors: BadReference for an unknown ideal name.
KVectors k_vectors(const ResolutionGraph& g, const std::vector<std::string>& ideal_names);

/// prod_sigma (1 - t^{k_sigma})^{-chi_sigma}; zero k-vectors and chi = 0 drop out.
/// Errors: DimensionMismatch.
FactorForm poincare_from_graph(const ResolutionGraph& g, const EulerData& euler, const KVectors& k);

/// prod_k (1 - t^k)^{-chi(S_k)} with S_k the union of the smooth parts of the
/// components whose multiplicity vector is k.
FactorForm alexander_from_strata(const ResolutionGraph& g, const EulerData& euler, const KVectors& k);

struct FiltrationIndex {
  enum class Kind { Divisorial, Curve, Ideal };
  Kind kind = Kind::Curve;
  /// Component id (divisorial), arrow label (curve) or ideal spec name (ideal).
  std::string ref;

  friend bool operator==(const FiltrationIndex&, const FiltrationIndex&) = default;
};

using FiltrationSpec = std::vector<FiltrationIndex>;

const char* to_string(FiltrationIndex::Kind kind);

struct FiltrationData {
  KVectors k;
  EulerData euler;
};

/// Exponent vectors and Euler characteristics of a filtration by divisorial
/// valuations, curve orders and ideals. A divisorial index sigma reads column
/// sigma of M, a curve index the column of its arrow component. Curve indices
/// and the strict transforms of ideal indices puncture the components they
/// meet; divisorial indices puncture nothing.
/// Errors: UnknownComponent, UnknownBranch, BadReference, NotIntegral.
FiltrationData filtration_data(const ResolutionGraph& g, const FiltrationSpec& spec);

FactorForm filtration_poincare(const ResolutionGraph& g, const FiltrationSpec& spec);

struct MixedBase {
  FactorForm form{0};
  std::vector<std::string> components;  // variables t_1 .. t_r'
  std::vector<std::string> branches;    // variables T_1 .. T_r'' after the components
};

/// The mixed formula with exponents read off M = -E^{-1}: component sigma
/// contributes (1 - t^{m'_sigma} T^{m''_sigma})^{-chi}, chi counting the arrows
/// of the chosen branches only.
MixedBase mixed_poincare(const ResolutionGraph& g, const std::vector<std::string>& components,
                         const std::vector<std::string>& branches);
MixedBase mixed_poincare(const ResolvedCurve& rc, const std::vector<std::string>& components,
                         const std::vector<std::string>& branches);

struct ZetaAlexander {
  FactorForm zeta{1};
  FactorForm alexander{1};
};

/// zeta: all variables identified; alexander: (1 - t) zeta for r = 1, p itself otherwise.
ZetaAlexander zeta_and_alexander(const FactorForm& p);

}  // namespace singpoincare
