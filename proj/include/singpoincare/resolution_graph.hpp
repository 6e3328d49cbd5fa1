#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singpoincare/exact_linalg.hpp"

namespace singpoincare {

enum class GraphMode { PlaneCurve, RationalSingularity };

const char* to_string(GraphMode mode);
GraphMode parse_graph_mode(const std::string& text);

struct Component {
  std::string id;
  int self_intersection = -1;
};

/// Strict transform of a curve branch meeting the exceptional divisor.
struct Arrow {
  std::string component;
  std::string label;
};

/// Multiplicities k_sigma of the pulled-back ideal along every component.
struct IdealSpec {
  std::string name;
  std::map<std::string, Integer> multiplicity;  // missing component == 0
  /// Arrow labels of the strict transform of the zero locus. Empty means the
  /// arrows labelled by `name`, if any.
  std::vector<std::string> curves;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Dual graph of a resolution. Every component is a rational curve.
struct ResolutionGraph {
  std::vector<Component> components;
  std::vector<std::pair<std::string, std::string>> edges;  // multi-edges allowed
  std::vector<Arrow> arrows;
  std::vector<IdealSpec> ideals;

  std::size_t size() const noexcept { return components.size(); }
  /// Position of a component in `components`; throws MathError(UnknownComponent).
  std::size_t index_of(const std::string& id) const;
  bool has_component(const std::string& id) const;
  const IdealSpec& ideal(const std::string& name) const;

  /// Multiplicity column of an ideal, in component order.
  std::vector<Integer> multiplicity_vector(const IdealSpec& spec) const;

  IntMatrix intersection_matrix() const;

  /// Arrow labels puncturing the components for the given ideals.
  std::vector<std::string> ideal_curves(const std::vector<std::string>& ideal_names) const;

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

/// Checks references, connectivity and the mode-specific lattice condition.
/// Errors: Disconnected, BadReference, NotUnimodular, NotNegativeDefinite.
void validate(const ResolutionGraph& g, GraphMode mode);

struct EulerData {
  std::map<std::string, int> chi;  // chi of the smooth part of each component
};

/// chi(E_sigma minus special points) counting every edge endpoint and every arrow.
EulerData euler_data(const ResolutionGraph& g);

/// Same, but only arrows whose label is in `arrow_labels` puncture the components.
EulerData euler_data(const ResolutionGraph& g, const std::vector<std::string>& arrow_labels);

struct LinkingData {
  RatMatrix m;       // minus the inverse of the intersection matrix
  Integer d;         // det(-E)
  SmithForm smith;   // Smith form of -E; coker is the group H
  std::vector<std::string> ids;

  std::size_t index_of(const std::string& id) const;
  /// All entries of M integral.
  bool integral() const;
};

/// Errors: SingularIntersectionMatrix.
LinkingData linking_data(const ResolutionGraph& g);

/// Order of h_sigma in H: lcm of the denominators in row sigma of M.
Integer element_order(const LinkingData& ld, const std::string& sigma);

/// Blows up the intersection point of two adjacent components. The new component
/// gets self-intersection -1, has chi = 0, and inherits k_a + k_b in every ideal.
ResolutionGraph blow_up_corner(const ResolutionGraph& g, const std::string& a, const std::string& b,
                               const std::string& new_id);

}  // namespace singpoincare
