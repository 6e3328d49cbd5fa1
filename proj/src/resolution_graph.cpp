#include "singpoincare/resolution_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "singpoincare/errors.hpp"

namespace singpoincare {

const char* to_string(GraphMode mode) {
  return mode == GraphMode::PlaneCurve ? "plane-curve" : "rational-singularity";
}

GraphMode parse_graph_mode(const std::string& text) {
  if (text == "plane-curve") return GraphMode::PlaneCurve;
  if (text == "rational-singularity") return GraphMode::RationalSingularity;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

std::size_t ResolutionGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].id == id) return i;
  throw MathError(ErrorKind::UnknownComponent, "no component '" + id + "'");
}

bool ResolutionGraph::has_component(const std::string& id) const {
  return std::any_of(components.begin(), components.end(), [&](const Component& c) { return c.id == id; });
}

std::vector<std::string> ResolutionGraph::ideal_curves(const std::vector<std::string>& ideal_names) const {
  std::vector<std::string> out;
  for (const auto& name : ideal_names) {
    const IdealSpec& spec = ideal(name);
    if (!spec.curves.empty()) {
      out.insert(out.end(), spec.curves.begin(), spec.curves.end());
    } else {
      for (const auto& a : arrows)
        if (a.label == name) out.push_back(name);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const IdealSpec& ResolutionGraph::ideal(const std::string& name) const {
  for (const auto& spec : ideals)
    if (spec.name == name) return spec;
  throw MathError(ErrorKind::BadReference, "no ideal named '" + name + "'");
}

std::vector<Integer> ResolutionGraph::multiplicity_vector(const IdealSpec& spec) const {
  std::vector<Integer> k(components.size(), 0);
  for (const auto& [id, value] : spec.multiplicity) k[index_of(id)] = value;
  return k;
}

IntMatrix ResolutionGraph::intersection_matrix() const {
  const std::size_t n = components.size();
  IntMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e.at(i, i) = components[i].self_intersection;
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a), j = index_of(b);
    e.at(i, j) += 1;
    e.at(j, i) += 1;
  }
  return e;
}

void validate(const ResolutionGraph& g, GraphMode mode) {
  if (g.components.empty()) throw MathError(ErrorKind::BadReference, "graph has no components");
  std::set<std::string> ids;
  for (const auto& c : g.components)
    if (!ids.insert(c.id).second) throw MathError(ErrorKind::BadReference, "duplicate component '" + c.id + "'");

  auto check_ref = [&](const std::string& id, const std::string& where) {
    if (!ids.count(id)) throw MathError(ErrorKind::BadReference, where + " references unknown component '" + id + "'");
  };
  for (const auto& [a, b] : g.edges) {
    check_ref(a, "edge");
    check_ref(b, "edge");
    if (a == b) throw MathError(ErrorKind::BadReference, "self-loop at '" + a + "'");
  }
  for (const auto& arrow : g.arrows) check_ref(arrow.component, "arrow '" + arrow.label + "'");
  std::set<std::string> ideal_names;
  for (const auto& spec : g.ideals) {
    if (!ideal_names.insert(spec.name).second)
      throw MathError(ErrorKind::BadReference, "duplicate ideal '" + spec.name + "'");
    for (const auto& [id, k] : spec.multiplicity) {
      check_ref(id, "ideal '" + spec.name + "'");
      if (k < 0) throw MathError(ErrorKind::BadReference, "negative multiplicity in ideal '" + spec.name + "'");
    }
    for (const auto& label : spec.curves)
      if (std::none_of(g.arrows.begin(), g.arrows.end(), [&](const Arrow& a) { return a.label == label; }))
        throw MathError(ErrorKind::BadReference, "ideal '" + spec.name + "' names unknown arrow '" + label + "'");
  }

  // Connectivity by union-find over edges.
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) parent[find(g.index_of(a))] = find(g.index_of(b));
  for (std::size_t i = 1; i < g.size(); ++i)
    if (find(i) != find(0)) throw MathError(ErrorKind::Disconnected, "component '" + g.components[i].id + "' is not connected to '" + g.components[0].id + "'");

  const IntMatrix minus_e = -g.intersection_matrix();
  if (mode == GraphMode::PlaneCurve) {
    Integer d = determinant(minus_e);
    if (d != 1) throw MathError(ErrorKind::NotUnimodular, "det(-E) = " + d.get_str() + ", expected 1");
  }
  // Sylvester: every leading principal minor of -E positive. A plane-curve graph
  // is negative definite as well, so both modes check this.
  for (std::size_t k = 1; k <= g.size(); ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = minus_e.at(i, j);
    if (determinant(minor) <= 0)
      throw MathError(ErrorKind::NotNegativeDefinite, "leading minor of order " + std::to_string(k) + " of -E is not positive");
  }
}

EulerData euler_data(const ResolutionGraph& g) {
  std::vector<std::string> labels;
  for (const auto& a : g.arrows) labels.push_back(a.label);
  return euler_data(g, labels);
}

EulerData euler_data(const ResolutionGraph& g, const std::vector<std::string>& arrow_labels) {
  EulerData out;
  for (const auto& c : g.components) out.chi[c.id] = 2;
  for (const auto& [a, b] : g.edges) {
    --out.chi.at(a);
    --out.chi.at(b);
  }
  for (const auto& arrow : g.arrows)
    if (std::find(arrow_labels.begin(), arrow_labels.end(), arrow.label) != arrow_labels.end())
      --out.chi.at(arrow.component);
  return out;
}

std::size_t LinkingData::index_of(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw MathError(ErrorKind::UnknownComponent, "no component '" + id + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

bool LinkingData::integral() const {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).get_den() != 1) return false;
  return true;
}

LinkingData linking_data(const ResolutionGraph& g) {
  const IntMatrix e = g.intersection_matrix();
  LinkingData ld;
  for (const auto& c : g.components) ld.ids.push_back(c.id);
  ld.d = determinant(-e);
  if (ld.d == 0) throw MathError(ErrorKind::SingularIntersectionMatrix, "intersection matrix is singular");
  ld.m = -invert(to_rational(e));
  ld.smith = smith_normal_form(-e);
  return ld;
}

Integer element_order(const LinkingData& ld, const std::string& sigma) {
  const std::size_t s = ld.index_of(sigma);
  Integer order = 1;
  for (std::size_t j = 0; j < ld.m.cols(); ++j) order = lcm(order, Integer(ld.m.at(s, j).get_den()));
  return order;
}

ResolutionGraph blow_up_corner(const ResolutionGraph& g, const std::string& a, const std::string& b,
                               const std::string& new_id) {
  if (g.has_component(new_id)) throw MathError(ErrorKind::BadReference, "component '" + new_id + "' already exists");
  ResolutionGraph out = g;
  auto edge = std::find_if(out.edges.begin(), out.edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
  if (edge == out.edges.end()) throw MathError(ErrorKind::BadReference, "components '" + a + "' and '" + b + "' do not meet");
  out.edges.erase(edge);
  out.components[out.index_of(a)].self_intersection -= 1;
  out.components[out.index_of(b)].self_intersection -= 1;
  out.components.push_back({new_id, -1});
  out.edges.emplace_back(a, new_id);
  out.edges.emplace_back(b, new_id);
  for (auto& spec : out.ideals) {
    Integer k = 0;
    if (auto it = spec.multiplicity.find(a); it != spec.multiplicity.end()) k += it->second;
    if (auto it = spec.multiplicity.find(b); it != spec.multiplicity.end()) k += it->second;
    if (k != 0) spec.multiplicity[new_id] = k;
  }
  return out;
}

}  // namespace singpoincare
