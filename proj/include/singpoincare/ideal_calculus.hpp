#pragma once

// Ideals written as products of divisorial ideals and curve ideals, and the
// substitutions that turn the mixed series into their Poincare series.

#include <map>
#include <string>
#include <vector>

#include "singpoincare/poincare_engine.hpp"
#include "singpoincare/resolution_graph.hpp"

namespace singpoincare {

/// prod_sigma I_sigma^{n_sigma} prod_j I_{C_j}^{m_j}. In the plane case all
/// n_sigma are integers; on a rational singularity they may be rationals r_sigma
/// with sum_sigma (E_sigma . E_delta) r_sigma integral for all delta.
struct IdealPresentation {
  std::string name;
  std::map<std::string, Rational> divisorial;  // component id -> exponent
  std::map<std::string, Integer> curves;       // branch (arrow label) -> exponent

  bool trivial() const;
  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;
};

/// Errors: UnknownComponent, UnknownBranch, InvalidInput (negative), NotIntegral.
void validate(const IdealPresentation& ip, const ResolutionGraph& g, GraphMode mode);

/// n = M k. Errors: DimensionMismatch.
std::vector<Rational> divisorial_exponents_from_multiplicities(const LinkingData& ld, const std::vector<Integer>& k);

/// Multiplicity vector of the pulled-back ideal: sum_sigma n_sigma m_{sigma .}
/// plus m_j times the column of the arrow component of C_j.
std::vector<Rational> multiplicities_of(const IdealPresentation& ip, const ResolutionGraph& g, const LinkingData& ld);

/// t_sigma -> t^{n_sigma}, T_j -> t^{m_j} in the base. The trivial presentation
/// gives 1. Errors: NotIntegral, HypothesisViolated, UnknownComponent, UnknownBranch.
FactorForm poincare_of_ideal(const IdealPresentation& ip, const MixedBase& base);

/// t_sigma -> prod_i t_i^{n_sigma^i}, T_j -> prod_i t_i^{m_j^i}. Every base branch
/// needs a positive exponent in some presentation. Errors: HypothesisViolated,
/// DimensionMismatch, NotIntegral.
FactorForm poincare_of_ideal_set(const std::vector<IdealPresentation>& ips, const MixedBase& base);

/// Every variable t_i -> t_i^{d}.
FactorForm dsigma_rescale(const FactorForm& f, const Integer& d);

}  // namespace singpoincare
