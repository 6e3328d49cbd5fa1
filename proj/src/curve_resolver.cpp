#include "singpoincare/curve_resolver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "singpoincare/errors.hpp"

namespace singpoincare {

// ---------------------------------------------------------------------------
// Branch data

PuiseuxBranch PuiseuxBranch::puiseux(std::string name, int x_order, std::vector<Term> y_terms, bool swapped) {
  PuiseuxBranch b;
  b.name = std::move(name);
  std::vector<Term> lead{{x_order, Rational(1)}};
  if (swapped) {
    b.x_terms = std::move(y_terms);
    b.y_terms = std::move(lead);
  } else {
    b.x_terms = std::move(lead);
    b.y_terms = std::move(y_terms);
  }
  return b;
}

namespace {

UniPoly to_poly(const std::vector<Term>& terms) {
  UniPoly p;
  for (const auto& term : terms) {
    if (term.exponent < 0) throw MathError(ErrorKind::InvalidInput, "negative exponent");
    if (p.size() <= static_cast<std::size_t>(term.exponent)) p.resize(static_cast<std::size_t>(term.exponent) + 1);
    p[static_cast<std::size_t>(term.exponent)] += term.coefficient;
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Term> to_terms(const UniPoly& p) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.push_back({static_cast<int>(i), p[i]});
  return terms;
}

bool is_monic_monomial(const std::vector<Term>& terms) {
  return terms.size() == 1 && terms[0].coefficient == 1;
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

UniPoly poly_add_constant(UniPoly a, const Rational& c) {
  if (a.empty()) a.resize(1);
  a[0] += c;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

UniPoly PuiseuxBranch::x_poly() const { return to_poly(x_terms); }
UniPoly PuiseuxBranch::y_poly() const { return to_poly(y_terms); }

std::optional<int> PuiseuxBranch::x_order() const {
  if (is_monic_monomial(x_terms)) return x_terms[0].exponent;
  if (is_monic_monomial(y_terms)) return y_terms[0].exponent;
  return std::nullopt;
}

bool PuiseuxBranch::swapped() const { return !is_monic_monomial(x_terms) && is_monic_monomial(y_terms); }

void validate_branch(const PuiseuxBranch& b) {
  int g = 0;
  for (const auto* terms : {&b.x_terms, &b.y_terms}) {
    int last = 0;
    for (const auto& term : *terms) {
      if (term.exponent <= last)
        throw MathError(ErrorKind::InvalidInput, "branch '" + b.name + "': exponents must be positive and strictly increasing");
      if (term.coefficient == 0)
        throw MathError(ErrorKind::InvalidInput, "branch '" + b.name + "': zero coefficient");
      last = term.exponent;
      g = std::gcd(g, term.exponent);
    }
  }
  if (g == 0) throw MathError(ErrorKind::InvalidInput, "branch '" + b.name + "' is the constant map");
  if (g != 1)
    throw MathError(ErrorKind::NotPrimitive,
                    "branch '" + b.name + "' factors through t -> t^" + std::to_string(g));
}

// ---------------------------------------------------------------------------
// Infinitely-near tree

std::size_t InfinitelyNearTree::blow_up_origin() {
  if (!points_.empty()) throw std::logic_error("origin already blown up");
  InfinitelyNearPoint o;
  o.id = "E1";
  points_.push_back(std::move(o));
  return 0;
}

std::size_t InfinitelyNearTree::blow_up(std::size_t parent, std::optional<Rational> slope) {
  if (parent >= points_.size()) throw MathError(ErrorKind::UnknownComponent, "no such point");
  if (child(parent, slope)) throw MathError(ErrorKind::InvalidInput, "point already blown up");
  const InfinitelyNearPoint& p = points_[parent];
  InfinitelyNearPoint q;
  q.id = "E" + std::to_string(points_.size() + 1);
  q.parent = parent;
  q.slope = slope;
  if (slope) {
    q.x_axis = parent;
    if (*slope == 0) q.y_axis = p.y_axis;
  } else {
    q.y_axis = parent;
    q.x_axis = p.x_axis;
  }
  q.proximate_to.push_back(parent);
  for (const auto& other : {q.x_axis, q.y_axis})
    if (other && *other != parent) q.proximate_to.push_back(*other);
  points_.push_back(std::move(q));
  return points_.size() - 1;
}

std::size_t InfinitelyNearTree::blow_up_corner(std::size_t a, std::size_t b) {
  auto [point, slope] = corner_address(a, b);
  return blow_up(point, slope);
}

std::size_t InfinitelyNearTree::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].id == id) return i;
  throw MathError(ErrorKind::UnknownComponent, "no component '" + id + "'");
}

std::optional<std::size_t> InfinitelyNearTree::child(std::size_t parent, const std::optional<Rational>& slope) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].parent == parent && points_[i].slope == slope) return i;
  return std::nullopt;
}

bool InfinitelyNearTree::proximate(std::size_t q, std::size_t p) const {
  const auto& prox = points_.at(q).proximate_to;
  return std::find(prox.begin(), prox.end(), p) != prox.end();
}

int InfinitelyNearTree::self_intersection(std::size_t p) const {
  int count = 0;
  for (std::size_t q = p + 1; q < points_.size(); ++q)
    if (proximate(q, p)) ++count;
  return -1 - count;
}

std::vector<std::pair<std::size_t, std::size_t>> InfinitelyNearTree::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t q = 0; q < points_.size(); ++q)
    for (std::size_t p : points_[q].proximate_to) {
      bool separated = false;
      for (std::size_t r = q + 1; r < points_.size() && !separated; ++r)
        separated = proximate(r, p) && proximate(r, q);
      if (!separated) out.emplace_back(p, q);
    }
  return out;
}

std::pair<std::size_t, std::optional<Rational>> InfinitelyNearTree::corner_address(std::size_t a, std::size_t b) const {
  if (a == b) throw MathError(ErrorKind::BadReference, "a component does not meet itself");
  std::size_t older = std::min(a, b), later = std::max(a, b);
  auto es = edges();
  if (std::find(es.begin(), es.end(), std::make_pair(older, later)) == es.end())
    throw MathError(ErrorKind::BadReference, points_.at(a).id + " and " + points_.at(b).id + " do not meet");
  const auto& q = points_[later];
  if (q.x_axis == older) return {later, std::nullopt};
  return {later, Rational(0)};
}

ResolutionGraph InfinitelyNearTree::graph() const {
  ResolutionGraph g;
  for (std::size_t p = 0; p < points_.size(); ++p) g.components.push_back({points_[p].id, self_intersection(p)});
  for (auto [p, q] : edges()) g.edges.emplace_back(points_[p].id, points_[q].id);
  return g;
}

std::pair<UniPoly, UniPoly> InfinitelyNearTree::push_down(std::size_t p, UniPoly x, UniPoly y) const {
  std::optional<std::size_t> cur = p;
  while (cur && points_.at(*cur).parent) {
    const auto& pt = points_[*cur];
    if (pt.slope) {
      y = poly_mul(x, poly_add_constant(std::move(y), *pt.slope));
    } else {
      x = poly_mul(x, y);
    }
    cur = pt.parent;
  }
  return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------------
// Truncated power series with tracked absolute precision.

namespace {

struct PrecisionExhausted {
  bool shared;
};

class Jet {
 public:
  static Jet exact_zero() {
    Jet j;
    j.zero_ = true;
    return j;
  }

  static Jet from_poly(const UniPoly& p, int precision) {
    if (p.empty()) return exact_zero();
    Jet j;
    j.c_.assign(static_cast<std::size_t>(precision), Rational(0));
    for (std::size_t i = 0; i < p.size() && i < j.c_.size(); ++i) j.c_[i] = p[i];
    return j;
  }

  bool is_exact_zero() const { return zero_; }
  int precision() const { return zero_ ? std::numeric_limits<int>::max() : static_cast<int>(c_.size()); }

  std::optional<int> order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
  }
  int order_lower_bound() const {
    auto o = order();
    return o ? *o : precision();
  }
  const Rational& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  Jet minus_constant(const Rational& value) const {
    if (zero_ && value == 0) return *this;
    Jet j = *this;
    if (j.zero_) throw std::logic_error("constant shift of an exact zero");
    if (!j.c_.empty()) j.c_[0] -= value;
    return j;
  }

  // num / den, where den has known order k and num vanishes to order >= k.
  friend Jet divide(const Jet& num, const Jet& den) {
    const int k = *den.order();
    if (num.zero_) return num;
    if (num.order_lower_bound() < k) throw std::logic_error("division with negative order");
    Jet n;
    n.c_.assign(num.c_.begin() + std::min<long>(k, static_cast<long>(num.c_.size())), num.c_.end());
    std::vector<Rational> u(den.c_.begin() + k, den.c_.end());
    const int result_precision =
        std::min(static_cast<int>(n.c_.size()), static_cast<int>(u.size()) + n.order_lower_bound());
    bool unit_is_one = u[0] == 1 && std::all_of(u.begin() + 1, u.end(), [](const Rational& v) { return v == 0; });
    Jet q;
    q.c_.assign(static_cast<std::size_t>(std::max(result_precision, 0)), Rational(0));
    if (unit_is_one) {
      for (std::size_t i = 0; i < q.c_.size(); ++i) q.c_[i] = n.c_[i];
      return q;
    }
    const Rational inv0 = 1 / u[0];
    for (std::size_t i = 0; i < q.c_.size(); ++i) {
      Rational acc = n.c_[i];
      for (std::size_t j = 1; j <= i && j < u.size(); ++j)
        if (u[j] != 0) acc -= u[j] * q.c_[i - j];
      q.c_[i] = acc * inv0;
    }
    return q;
  }

 private:
  std::vector<Rational> c_;
  bool zero_ = false;
};

enum class Smaller { X, Y, Equal };

struct OrderComparison {
  int multiplicity;
  Smaller smaller;
};

OrderComparison compare_orders(const Jet& x, const Jet& y, bool shared) {
  auto ox = x.order(), oy = y.order();
  if (ox && oy) {
    if (*ox < *oy) return {*ox, Smaller::X};
    if (*oy < *ox) return {*oy, Smaller::Y};
    return {*ox, Smaller::Equal};
  }
  if (ox && y.precision() > *ox) return {*ox, Smaller::X};
  if (oy && x.precision() > *oy) return {*oy, Smaller::Y};
  throw PrecisionExhausted{shared};
}

struct BranchState {
  std::size_t branch;
  Jet x, y;
};

struct Moved {
  std::optional<Rational> slope;
  BranchState state;
};

// One blowup step of a branch passing through the current point.
Moved move_through_blowup(const BranchState& s, bool shared) {
  OrderComparison cmp = compare_orders(s.x, s.y, shared);
  if (cmp.smaller == Smaller::Y) return {std::nullopt, {s.branch, divide(s.x, s.y), s.y}};
  Rational slope = 0;
  if (cmp.smaller == Smaller::Equal) slope = s.y.coeff(cmp.multiplicity) / s.x.coeff(cmp.multiplicity);
  return {slope, {s.branch, s.x, divide(s.y, s.x).minus_constant(slope)}};
}

ResolvedCurve resolve_at_precision(const std::vector<PuiseuxBranch>& branches, int precision,
                                   const ResolveOptions& options) {
  ResolvedCurve rc;
  rc.branches = branches;
  InfinitelyNearTree& tree = rc.tree;
  const std::size_t origin = tree.blow_up_origin();

  std::vector<BranchState> initial;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    BranchState s{i, Jet::from_poly(branches[i].x_poly(), precision), Jet::from_poly(branches[i].y_poly(), precision)};
    tree.point(origin).multiplicities[branches[i].name] = compare_orders(s.x, s.y, branches.size() > 1).multiplicity;
    initial.push_back(std::move(s));
  }

  std::deque<std::pair<std::size_t, std::vector<BranchState>>> work;
  work.emplace_back(origin, std::move(initial));
  while (!work.empty()) {
    auto [p, states] = std::move(work.front());
    work.pop_front();
    const bool shared = states.size() > 1;

    std::vector<std::pair<std::optional<Rational>, std::vector<BranchState>>> groups;
    for (const auto& s : states) {
      Moved m = move_through_blowup(s, shared);
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == m.slope; });
      if (it == groups.end()) {
        groups.emplace_back(m.slope, std::vector<BranchState>{});
        it = groups.end() - 1;
      }
      it->second.push_back(std::move(m.state));
    }

    for (auto& [slope, members] : groups) {
      const InfinitelyNearPoint& pt = tree.point(p);
      const bool corner = slope ? (*slope == 0 && pt.y_axis.has_value()) : pt.x_axis.has_value();
      if (members.size() == 1) {
        OrderComparison cmp = compare_orders(members[0].x, members[0].y, false);
        // E_p is {x=0} at a finite slope and {y=0} at infinity.
        const bool transversal = slope ? cmp.smaller != Smaller::Y : cmp.smaller != Smaller::X;
        if (!corner && cmp.multiplicity == 1 && transversal) {
          rc.ends[branches[members[0].branch].name] = {p, slope};
          continue;
        }
      }
      const std::size_t q = tree.blow_up(p, slope);
      for (const auto& s : members)
        tree.point(q).multiplicities[branches[s.branch].name] =
            compare_orders(s.x, s.y, members.size() > 1).multiplicity;
      work.emplace_back(q, std::move(members));
    }
  }

  for (const auto& [a, b] : options.extra_corner_blowups) tree.blow_up_corner(tree.index_of(a), tree.index_of(b));

  rc.graph = tree.graph();
  for (const auto& branch : branches) {
    std::vector<Integer> v(tree.size(), 0);
    std::vector<int> seq;
    for (std::size_t p = 0; p < tree.size(); ++p) {
      const auto& pt = tree.point(p);
      auto it = pt.multiplicities.find(branch.name);
      if (it != pt.multiplicities.end()) {
        v[p] = it->second;
        seq.push_back(it->second);
      }
      for (std::size_t q : pt.proximate_to) v[p] += v[q];
    }
    IdealSpec spec{branch.name, {}, {}};
    for (std::size_t p = 0; p < tree.size(); ++p)
      if (v[p] != 0) spec.multiplicity[tree.point(p).id] = v[p];
    rc.graph.arrows.push_back({tree.point(rc.ends.at(branch.name).component).id, branch.name});
    rc.graph.ideals.push_back(std::move(spec));
    rc.valuations[branch.name] = std::move(v);
    rc.multiplicity_sequences[branch.name] = std::move(seq);
  }
  return rc;
}

// Exact test for two Puiseux-form branches parametrizing the same germ: over Q
// the only reparametrizations preserving x = t^n are t -> +-t.
bool same_puiseux_germ(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  if (!a.x_order() || !b.x_order() || *a.x_order() != *b.x_order() || a.swapped() != b.swapped()) return false;
  const auto& ta = a.swapped() ? a.x_terms : a.y_terms;
  const auto& tb = b.swapped() ? b.x_terms : b.y_terms;
  if (ta == tb) return true;
  if (*a.x_order() % 2 != 0 || ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].exponent != tb[i].exponent) return false;
    Rational expected = ta[i].exponent % 2 ? Rational(-ta[i].coefficient) : ta[i].coefficient;
    if (expected != tb[i].coefficient) return false;
  }
  return true;
}

}  // namespace

Integer ResolvedCurve::valuation(const std::string& component, const std::string& branch) const {
  auto it = valuations.find(branch);
  if (it == valuations.end()) throw MathError(ErrorKind::UnknownBranch, "no branch '" + branch + "'");
  return it->second.at(tree.index_of(component));
}

ResolvedCurve resolve(const std::vector<PuiseuxBranch>& branches, const ResolveOptions& options) {
  if (branches.empty()) throw MathError(ErrorKind::InvalidInput, "no branches to resolve");
  std::size_t max_degree = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    validate_branch(branches[i]);
    max_degree = std::max({max_degree, branches[i].x_poly().size(), branches[i].y_poly().size()});
    for (std::size_t j = 0; j < i; ++j) {
      if (branches[i].name == branches[j].name)
        throw MathError(ErrorKind::InvalidInput, "duplicate branch name '" + branches[i].name + "'");
      if (same_puiseux_germ(branches[i], branches[j]))
        throw MathError(ErrorKind::IndistinguishableBranches,
                        "branches '" + branches[j].name + "' and '" + branches[i].name + "' are the same germ");
    }
  }
  int precision = std::max(options.initial_precision, static_cast<int>(2 * max_degree + 16));
  for (;;) {
    try {
      return resolve_at_precision(branches, precision, options);
    } catch (const PrecisionExhausted& e) {
      if (precision >= options.max_precision) {
        if (e.shared)
          throw MathError(ErrorKind::IndistinguishableBranches,
                          "branches still share an infinitely-near point at precision " + std::to_string(precision));
        throw MathError(ErrorKind::TruncationTooShort,
                        "branch data exhausted at precision " + std::to_string(precision));
      }
      precision = std::min(2 * precision, options.max_precision);
    }
  }
}

ResolvedCurve from_tree(InfinitelyNearTree tree) {
  ResolvedCurve rc;
  rc.graph = tree.graph();
  rc.tree = std::move(tree);
  return rc;
}

std::optional<Integer> intersection_by_substitution(const PuiseuxBranch& smooth, const PuiseuxBranch& other) {
  auto n = smooth.x_order();
  if (!n || *n != 1) return std::nullopt;
  // smooth: {v = g(u)} with (u, v) = (x, y), or (y, x) when swapped.
  const bool sw = smooth.swapped();
  const UniPoly g = sw ? smooth.x_poly() : smooth.y_poly();
  const UniPoly u = sw ? other.y_poly() : other.x_poly();
  const UniPoly v = sw ? other.x_poly() : other.y_poly();
  // Horner: g(u(t)).
  UniPoly composed;
  for (std::size_t i = g.size(); i-- > 0;) composed = poly_add_constant(poly_mul(composed, u), g[i]);
  UniPoly diff = v;
  if (diff.size() < composed.size()) diff.resize(composed.size());
  for (std::size_t i = 0; i < composed.size(); ++i) diff[i] -= composed[i];
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] != 0) return Integer(static_cast<long>(i));
  throw MathError(ErrorKind::IndistinguishableBranches, "'" + other.name + "' lies on '" + smooth.name + "'");
}

Integer intersection_number(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  PuiseuxBranch first = a, second = b;
  first.name = "a";
  second.name = "b";
  ResolvedCurve rc = resolve({first, second});
  Integer total = 0;
  for (const auto& pt : rc.tree.points()) {
    auto ia = pt.multiplicities.find("a"), ib = pt.multiplicities.find("b");
    if (ia != pt.multiplicities.end() && ib != pt.multiplicities.end()) total += ia->second * ib->second;
  }
  for (const auto& [smooth, other] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
    auto check = intersection_by_substitution(*smooth, *other);
    if (check && *check != total)
      throw std::logic_error("Noether sum " + total.get_str() + " disagrees with substitution " + check->get_str());
  }
  return total;
}

std::vector<Rational> special_slopes(const ResolvedCurve& rc, const std::string& sigma) {
  const std::size_t p = rc.tree.index_of(sigma);
  std::vector<Rational> out;
  const auto& pt = rc.tree.point(p);
  if (pt.y_axis) out.emplace_back(0);
  for (const auto& q : rc.tree.points())
    if (q.parent == p && q.slope) out.push_back(*q.slope);
  for (const auto& [name, end] : rc.ends)
    if (end.component == p && end.slope) out.push_back(*end.slope);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PuiseuxBranch curvette(const ResolvedCurve& rc, const std::string& sigma, const Rational& seed, std::string name) {
  const std::size_t p = rc.tree.index_of(sigma);
  auto special = special_slopes(rc, sigma);
  if (std::find(special.begin(), special.end(), seed) != special.end())
    throw MathError(ErrorKind::SeedNotGeneric, "slope " + seed.get_str() + " is a special point of " + sigma);
  // In the chart of the blowup of p the germ is {y' = 0}: x = s, y = seed * s.
  auto [x, y] = rc.tree.push_down(p, UniPoly{0, 1}, UniPoly{0, seed});
  PuiseuxBranch b;
  b.name = name.empty() ? "L_" + sigma : std::move(name);
  b.x_terms = to_terms(x);
  b.y_terms = to_terms(y);
  return b;
}

}  // namespace singpoincare
