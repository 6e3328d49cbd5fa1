#include "singpoincare/poincare_engine.hpp"

#include <algorithm>
#include <optional>

namespace singpoincare {

namespace {

int to_int(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw MathError(ErrorKind::NotIntegral, what + " is not an integer: " + q.get_str());
  if (!q.get_num().fits_sint_p()) throw MathError(ErrorKind::InvalidInput, what + " is too large");
  return static_cast<int>(q.get_num().get_si());
}

bool all_zero(const Monomial& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

std::size_t common_width(const ResolutionGraph& g, const KVectors& k) {
  if (k.size() != g.size())
    throw MathError(ErrorKind::DimensionMismatch,
                    std::to_string(k.size()) + " k-vectors for " + std::to_string(g.size()) + " components");
  const std::size_t r = k.empty() ? 0 : k[0].size();
  for (const auto& v : k)
    if (v.size() != r) throw MathError(ErrorKind::DimensionMismatch, "k-vectors of different lengths");
  return r;
}

}  // namespace

const char* to_string(FiltrationIndex::Kind kind) {
  switch (kind) {
    case FiltrationIndex::Kind::Divisorial: return "divisorial";
    case FiltrationIndex::Kind::Curve: return "curve";
    case FiltrationIndex::Kind::Ideal: return "ideal";
  }
  return "?";
}

KVectors k_vectors(const ResolutionGraph& g, const std::vector<std::string>& ideal_names) {
  KVectors k(g.size(), Monomial(ideal_names.size(), 0));
  for (std::size_t i = 0; i < ideal_names.size(); ++i) {
    const auto column = g.multiplicity_vector(g.ideal(ideal_names[i]));
    for (std::size_t s = 0; s < g.size(); ++s) k[s][i] = to_int(Rational(column[s]), "multiplicity");
  }
  return k;
}

FactorForm poincare_from_graph(const ResolutionGraph& g, const EulerData& euler, const KVectors& k) {
  FactorForm f(common_width(g, k));
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (all_zero(k[s])) continue;
    const int chi = euler.chi.at(g.components[s].id);
    if (chi != 0) f.multiply(k[s], -chi);
  }
  return f;
}

FactorForm alexander_from_strata(const ResolutionGraph& g, const EulerData& euler, const KVectors& k) {
  const std::size_t r = common_width(g, k);
  std::map<Monomial, long> strata;
  for (std::size_t s = 0; s < g.size(); ++s)
    if (!all_zero(k[s])) strata[k[s]] += euler.chi.at(g.components[s].id);
  FactorForm f(r);
  for (const auto& [key, chi] : strata)
    if (chi != 0) f.multiply(key, -chi);
  return f;
}

FiltrationData filtration_data(const ResolutionGraph& g, const FiltrationSpec& spec) {
  std::optional<LinkingData> ld;
  auto arrow_component = [&](const std::string& label) -> const std::string* {
    for (const auto& a : g.arrows)
      if (a.label == label) return &a.component;
    return nullptr;
  };

  KVectors k(g.size(), Monomial(spec.size(), 0));
  std::vector<std::string> punctures;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& index = spec[i];
    switch (index.kind) {
      case FiltrationIndex::Kind::Divisorial:
      case FiltrationIndex::Kind::Curve: {
        std::size_t col;
        if (index.kind == FiltrationIndex::Kind::Divisorial) {
          col = g.index_of(index.ref);
        } else {
          const std::string* comp = arrow_component(index.ref);
          if (!comp) throw MathError(ErrorKind::UnknownBranch, "no arrow labelled '" + index.ref + "'");
          col = g.index_of(*comp);
          punctures.push_back(index.ref);
        }
        if (!ld) ld = linking_data(g);
        for (std::size_t s = 0; s < g.size(); ++s) k[s][i] = to_int(ld->m.at(s, col), "linking number");
        break;
      }
      case FiltrationIndex::Kind::Ideal: {
        const auto column = g.multiplicity_vector(g.ideal(index.ref));
        for (std::size_t s = 0; s < g.size(); ++s) k[s][i] = to_int(Rational(column[s]), "multiplicity");
        for (auto& label : g.ideal_curves({index.ref})) punctures.push_back(std::move(label));
        break;
      }
    }
  }
  return {std::move(k), euler_data(g, punctures)};
}

FactorForm filtration_poincare(const ResolutionGraph& g, const FiltrationSpec& spec) {
  const FiltrationData data = filtration_data(g, spec);
  return poincare_from_graph(g, data.euler, data.k);
}

MixedBase mixed_poincare(const ResolutionGraph& g, const std::vector<std::string>& components,
                         const std::vector<std::string>& branches) {
  FiltrationSpec spec;
  for (const auto& c : components) {
    g.index_of(c);
    spec.push_back({FiltrationIndex::Kind::Divisorial, c});
  }
  for (const auto& b : branches) spec.push_back({FiltrationIndex::Kind::Curve, b});
  return {filtration_poincare(g, spec), components, branches};
}

MixedBase mixed_poincare(const ResolvedCurve& rc, const std::vector<std::string>& components,
                         const std::vector<std::string>& branches) {
  for (const auto& b : branches)
    if (!rc.valuations.count(b)) throw MathError(ErrorKind::UnknownBranch, "no branch '" + b + "'");
  return mixed_poincare(rc.graph, components, branches);
}

ZetaAlexander zeta_and_alexander(const FactorForm& p) {
  ZetaAlexander out;
  out.zeta = identify_variables(p);
  if (p.variables() <= 1) {
    out.alexander = out.zeta;
    out.alexander.multiply({1}, 1);
  } else {
    out.alexander = p;
  }
  return out;
}

}  // namespace singpoincare
