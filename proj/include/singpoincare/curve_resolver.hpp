#pragma once

// Embedded resolution of plane branches by blowing up along exact
// parametrizations. Everything stays in Q[t] (truncated power series with
// tracked precision), no Newton-Puiseux factorization of equations.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singpoincare/exact_linalg.hpp"
#include "singpoincare/resolution_graph.hpp"

namespace singpoincare {

struct Term {
  int exponent = 0;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Dense polynomial in one variable, index = exponent.
using UniPoly = std::vector<Rational>;

/// A plane branch through the origin given by polynomial coordinates
/// (x(t), y(t)). The usual input is Puiseux form x = t^n, y = sum a_i t^i
/// (or the swapped form); curvettes come out in general form.
struct PuiseuxBranch {
  std::string name;
  std::vector<Term> x_terms;
  std::vector<Term> y_terms;

  static PuiseuxBranch puiseux(std::string name, int x_order, std::vector<Term> y_terms, bool swapped = false);

  UniPoly x_poly() const;
  UniPoly y_poly() const;

  /// n when the branch is x = t^n, y = ... (or swapped); nullopt for general form.
  std::optional<int> x_order() const;
  bool swapped() const;

  friend bool operator==(const PuiseuxBranch&, const PuiseuxBranch&) = default;
};

/// Exponents positive and strictly increasing, coefficients nonzero, not the
/// zero map, gcd of all exponents 1. Errors: InvalidInput, NotPrimitive.
void validate_branch(const PuiseuxBranch& b);

/// A point of the infinitely-near tree. Points are blown up in index order and
/// point i creates exceptional component i.
struct InfinitelyNearPoint {
  std::string id;                        // name of the component it creates
  std::optional<std::size_t> parent;     // none for the origin
  std::optional<Rational> slope;         // position on E_parent; none = point at infinity
  std::vector<std::size_t> proximate_to; // components through the point
  // Components through the point in local coordinates: {x = 0} and {y = 0}.
  std::optional<std::size_t> x_axis;
  std::optional<std::size_t> y_axis;
  std::map<std::string, int> multiplicities;  // branches through the point
};

/// Sequence of point blowups of (C^2, 0). In the local coordinates (x', y') at a
/// point with slope c the parent coordinates are x = x', y = x'(y' + c); at the
/// point at infinity they are x = x'y', y = y'.
class InfinitelyNearTree {
 public:
  /// Blows up the origin (always point 0).
  std::size_t blow_up_origin();
  /// Blows up the point of E_parent at `slope` (none = infinity).
  std::size_t blow_up(std::size_t parent, std::optional<Rational> slope);
  /// Blows up the intersection point of two adjacent components.
  std::size_t blow_up_corner(std::size_t a, std::size_t b);

  const std::vector<InfinitelyNearPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  InfinitelyNearPoint& point(std::size_t i) { return points_.at(i); }
  const InfinitelyNearPoint& point(std::size_t i) const { return points_.at(i); }
  std::size_t index_of(const std::string& id) const;

  /// Child of `parent` at `slope`, if blown up.
  std::optional<std::size_t> child(std::size_t parent, const std::optional<Rational>& slope) const;
  bool proximate(std::size_t q, std::size_t p) const;

  int self_intersection(std::size_t p) const;
  /// Pairs (p, q), q proximate to p, with no later point proximate to both.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Position on the later of the two components where they meet.
  std::pair<std::size_t, std::optional<Rational>> corner_address(std::size_t a, std::size_t b) const;

  /// Dual graph without arrows or ideals.
  ResolutionGraph graph() const;

  /// Maps a germ given in the local coordinates at point p down to the origin.
  std::pair<UniPoly, UniPoly> push_down(std::size_t p, UniPoly x, UniPoly y) const;

 private:
  std::vector<InfinitelyNearPoint> points_;
};

struct BranchEnd {
  std::size_t component = 0;
  std::optional<Rational> slope;  // where the strict transform meets E_component
};

struct ResolvedCurve {
  InfinitelyNearTree tree;
  std::vector<PuiseuxBranch> branches;
  ResolutionGraph graph;  // arrow and ideal per branch, named by the branch
  std::map<std::string, std::vector<Integer>> valuations;  // per branch, component order
  std::map<std::string, std::vector<int>> multiplicity_sequences;
  std::map<std::string, BranchEnd> ends;

  Integer valuation(const std::string& component, const std::string& branch) const;
};

struct ResolveOptions {
  int initial_precision = 64;
  int max_precision = 2048;
  /// Corners (by component id) blown up after the resolution proper.
  std::vector<std::pair<std::string, std::string>> extra_corner_blowups;
};

/// Minimal embedded resolution with normal crossings of the given branches.
/// Errors: InvalidInput, NotPrimitive, IndistinguishableBranches, TruncationTooShort.
ResolvedCurve resolve(const std::vector<PuiseuxBranch>& branches, const ResolveOptions& options = {});

/// Wraps a bare blowup sequence (no branches) as a resolved configuration.
ResolvedCurve from_tree(InfinitelyNearTree tree);

/// Intersection multiplicity via Noether's formula on the joint resolution.
/// Errors: IndistinguishableBranches.
Integer intersection_number(const PuiseuxBranch& a, const PuiseuxBranch& b);

/// For a branch of the form x = t (resp. swapped y = t) the curve has the
/// equation y - g(x) (resp. x - g(y)); returns ord_t of that equation along
/// `other`. nullopt when `smooth` is not of that form.
std::optional<Integer> intersection_by_substitution(const PuiseuxBranch& smooth, const PuiseuxBranch& other);

/// Slopes on E_sigma that a curvette must avoid.
std::vector<Rational> special_slopes(const ResolvedCurve& rc, const std::string& sigma);

/// Smooth germ meeting E_sigma transversally at slope `seed`, pushed down to the
/// origin. Errors: UnknownComponent, SeedNotGeneric.
PuiseuxBranch curvette(const ResolvedCurve& rc, const std::string& sigma, const Rational& seed,
                       std::string name = {});

}  // namespace singpoincare
