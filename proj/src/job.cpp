#include "singpoincare/job.hpp"

#include <set>
#include <sstream>

namespace singpoincare {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw JobError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing '") + key + "'");
  return *it;
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(where, "unknown key '" + key + "'");
  }
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(where, "not a rational number: '" + j.get<std::string>() + "'");
    }
  }
  fail(where, "expected an integer or a string \"p/q\"");
}

Integer integer_at(const Json& j, const std::string& where) {
  Rational q = rational_at(j, where);
  if (q.get_den() != 1) fail(where, "expected an integer");
  return q.get_num();
}

int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_vector_at(const Json& j, const std::string& where) {
  std::vector<int> out;
  std::size_t i = 0;
  for (const auto& v : array_at(j, where)) out.push_back(int_at(v, where + "/" + std::to_string(i++)));
  return out;
}

std::vector<std::string> string_vector_at(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : array_at(j, where)) out.push_back(string_at(v, where + "/" + std::to_string(i++)));
  return out;
}

std::vector<Term> terms_at(const Json& j, const std::string& where) {
  std::vector<Term> out;
  std::size_t i = 0;
  for (const auto& t : array_at(j, where)) {
    const std::string w = where + "/" + std::to_string(i++);
    if (!t.is_array() || t.size() != 2) fail(w, "expected [exponent, coefficient]");
    out.push_back({int_at(t[0], w + "/0"), rational_at(t[1], w + "/1")});
  }
  return out;
}

Json terms_json(const std::vector<Term>& terms) {
  Json a = Json::array();
  for (const auto& t : terms) a.push_back(Json::array({t.exponent, t.coefficient.get_str()}));
  return a;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

GraphMode mode_at(const Json& j, const std::string& where) {
  try {
    return parse_graph_mode(string_at(j, where));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

}  // namespace

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json to_json(const PuiseuxBranch& b) {
  Json j;
  j["name"] = b.name;
  if (auto n = b.x_order()) {
    j["x_order"] = *n;
    j["y_terms"] = terms_json(b.swapped() ? b.x_terms : b.y_terms);
    j["swapped"] = b.swapped();
  } else {
    j["x"] = terms_json(b.x_terms);
    j["y"] = terms_json(b.y_terms);
  }
  return j;
}

PuiseuxBranch branch_from_json(const Json& j, const std::string& where) {
  allow_keys(j, {"name", "x_order", "y_terms", "swapped", "x", "y"}, where);
  const std::string name = string_at(member(j, "name", where), where + "/name");
  if (j.contains("x_order")) {
    if (j.contains("x") || j.contains("y")) fail(where, "give either x_order/y_terms or x/y");
    const int n = int_at(j["x_order"], where + "/x_order");
    if (n <= 0) fail(where + "/x_order", "must be positive");
    bool swapped = false;
    if (j.contains("swapped")) {
      if (!j["swapped"].is_boolean()) fail(where + "/swapped", "expected a boolean");
      swapped = j["swapped"].get<bool>();
    }
    std::vector<Term> y = j.contains("y_terms") ? terms_at(j["y_terms"], where + "/y_terms") : std::vector<Term>{};
    return PuiseuxBranch::puiseux(name, n, std::move(y), swapped);
  }
  PuiseuxBranch b;
  b.name = name;
  b.x_terms = terms_at(member(j, "x", where), where + "/x");
  b.y_terms = terms_at(member(j, "y", where), where + "/y");
  return b;
}

Json to_json(const ResolutionGraph& g, std::optional<GraphMode> mode) {
  Json j;
  if (mode) j["mode"] = to_string(*mode);
  Json comps = Json::array();
  for (const auto& c : g.components) comps.push_back({{"id", c.id}, {"self_intersection", c.self_intersection}});
  j["components"] = comps;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  Json arrows = Json::array();
  for (const auto& a : g.arrows) arrows.push_back({{"component", a.component}, {"label", a.label}});
  j["arrows"] = arrows;
  Json ideals = Json::array();
  for (const auto& spec : g.ideals) {
    Json s;
    s["name"] = spec.name;
    Json mult = Json::object();
    for (const auto& [id, k] : spec.multiplicity) mult[id] = integer_json(k);
    s["multiplicity"] = mult;
    if (!spec.curves.empty()) s["curves"] = spec.curves;
    ideals.push_back(s);
  }
  j["ideals"] = ideals;
  return j;
}

ResolutionGraph graph_from_json(const Json& j, const std::string& where) {
  allow_keys(j, {"mode", "components", "edges", "arrows", "ideals"}, where);
  ResolutionGraph g;
  std::size_t i = 0;
  for (const auto& c : array_at(member(j, "components", where), where + "/components")) {
    const std::string w = where + "/components/" + std::to_string(i++);
    allow_keys(c, {"id", "self_intersection", "genus"}, w);
    if (c.contains("genus") && int_at(c["genus"], w + "/genus") != 0)
      fail(w + "/genus", "only rational components are supported");
    const int e = int_at(member(c, "self_intersection", w), w + "/self_intersection");
    if (e >= 0) fail(w + "/self_intersection", "must be negative");
    g.components.push_back({string_at(member(c, "id", w), w + "/id"), e});
  }
  if (j.contains("edges")) {
    i = 0;
    for (const auto& e : array_at(j["edges"], where + "/edges")) {
      const std::string w = where + "/edges/" + std::to_string(i++);
      if (!e.is_array() || e.size() != 2) fail(w, "expected [component, component]");
      g.edges.emplace_back(string_at(e[0], w + "/0"), string_at(e[1], w + "/1"));
    }
  }
  if (j.contains("arrows")) {
    i = 0;
    for (const auto& a : array_at(j["arrows"], where + "/arrows")) {
      const std::string w = where + "/arrows/" + std::to_string(i++);
      allow_keys(a, {"component", "label"}, w);
      g.arrows.push_back({string_at(member(a, "component", w), w + "/component"),
                          string_at(member(a, "label", w), w + "/label")});
    }
  }
  if (j.contains("ideals")) {
    i = 0;
    for (const auto& s : array_at(j["ideals"], where + "/ideals")) {
      const std::string w = where + "/ideals/" + std::to_string(i++);
      allow_keys(s, {"name", "multiplicity", "curves"}, w);
      IdealSpec spec;
      spec.name = string_at(member(s, "name", w), w + "/name");
      const Json& mult = member(s, "multiplicity", w);
      if (!mult.is_object()) fail(w + "/multiplicity", "expected an object");
      for (const auto& [id, k] : mult.items()) spec.multiplicity[id] = integer_at(k, w + "/multiplicity/" + id);
      if (s.contains("curves")) spec.curves = string_vector_at(s["curves"], w + "/curves");
      g.ideals.push_back(std::move(spec));
    }
  }
  return g;
}

Json to_json(const Character& chi) {
  Json a = Json::array();
  for (const auto& q : chi.values()) a.push_back(q.get_str());
  return a;
}

Character character_from_json(const Json& j, const std::string& where) {
  std::vector<Rational> v;
  std::size_t i = 0;
  for (const auto& q : array_at(j, where)) v.push_back(rational_at(q, where + "/" + std::to_string(i++)));
  return Character(std::move(v));
}

Json to_json(const FactorForm& f) {
  Json j;
  j["variables"] = f.variables();
  Json factors = Json::array();
  for (const auto& [key, e] : f.factors()) {
    Json x;
    x["k"] = key.k;
    x["e"] = e;
    if (key.tag) x["tag"] = to_json(*key.tag);
    factors.push_back(x);
  }
  j["factors"] = factors;
  return j;
}

FactorForm factor_form_from_json(const Json& j, const std::string& where) {
  allow_keys(j, {"variables", "factors"}, where);
  const int r = int_at(member(j, "variables", where), where + "/variables");
  if (r < 0) fail(where + "/variables", "must be nonnegative");
  FactorForm f(static_cast<std::size_t>(r));
  std::size_t i = 0;
  for (const auto& x : array_at(member(j, "factors", where), where + "/factors")) {
    const std::string w = where + "/factors/" + std::to_string(i++);
    allow_keys(x, {"k", "e", "tag"}, w);
    std::optional<Character> tag;
    if (x.contains("tag")) tag = character_from_json(x["tag"], w + "/tag");
    try {
      f.multiply(int_vector_at(member(x, "k", w), w + "/k"), int_at(member(x, "e", w), w + "/e"), tag);
    } catch (const MathError& e) {
      fail(w, e.what());
    }
  }
  return f;
}

namespace {

Json truncation_json(const Truncation& t) {
  Json j;
  j["total"] = t.total;
  if (t.box) j["box"] = *t.box;
  return j;
}

}  // namespace

Json to_json(const IntSeries& s) {
  Json j;
  j["variables"] = s.variables();
  j["truncation"] = truncation_json(s.truncation());
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"m", m}, {"c", integer_json(c)}});
  j["terms"] = terms;
  return j;
}

IntSeries series_from_json(const Json& j, const std::string& where) {
  allow_keys(j, {"variables", "truncation", "terms"}, where);
  const int r = int_at(member(j, "variables", where), where + "/variables");
  if (r < 0) fail(where + "/variables", "must be nonnegative");
  const Json& tj = member(j, "truncation", where);
  allow_keys(tj, {"total", "box"}, where + "/truncation");
  Truncation t{int_at(member(tj, "total", where + "/truncation"), where + "/truncation/total"), std::nullopt};
  if (tj.contains("box")) t.box = int_vector_at(tj["box"], where + "/truncation/box");
  try {
    IntSeries s(static_cast<std::size_t>(r), t);
    std::size_t i = 0;
    for (const auto& term : array_at(member(j, "terms", where), where + "/terms")) {
      const std::string w = where + "/terms/" + std::to_string(i++);
      allow_keys(term, {"m", "c"}, w);
      s.add_term(int_vector_at(member(term, "m", w), w + "/m"), integer_at(member(term, "c", w), w + "/c"));
    }
    return s;
  } catch (const MathError& e) {
    fail(where, e.what());
  }
}

Json to_json(const EquivariantSeries& s) {
  Json j;
  j["variables"] = s.variables();
  j["truncation"] = truncation_json(s.truncation());
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json coeff = Json::array();
    for (const auto& [chi, n] : c.terms()) coeff.push_back({{"character", to_json(chi)}, {"n", integer_json(n)}});
    terms.push_back({{"m", m}, {"c", coeff}});
  }
  j["terms"] = terms;
  return j;
}

std::string to_dot(const ResolutionGraph& g, const EulerData& euler) {
  std::ostringstream os;
  os << "graph resolution {\n  node [shape=circle];\n";
  for (const auto& c : g.components)
    os << "  \"" << c.id << "\" [label=\"" << c.id << " | " << c.self_intersection << " | chi=" << euler.chi.at(c.id)
       << "\"];\n";
  for (const auto& [a, b] : g.edges) os << "  \"" << a << "\" -- \"" << b << "\";\n";
  std::size_t i = 0;
  for (const auto& a : g.arrows) {
    const std::string node = "arrow" + std::to_string(i++);
    os << "  \"" << node << "\" [shape=point, xlabel=\"" << a.label << "\"];\n";
    os << "  \"" << a.component << "\" -- \"" << node << "\" [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

Job parse_job(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    const auto cut = msg.find("syntax error");
    if (cut != std::string::npos) msg = msg.substr(cut);
    throw JobError("job:" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg, line, column);
  }
  const std::string top = "job";
  allow_keys(root, {"branches", "graph", "ideals", "filtration", "presentations", "options"}, top);

  Job job;
  if (root.contains("branches") == root.contains("graph")) fail(top, "exactly one of 'branches' and 'graph' is required");
  if (root.contains("branches")) {
    std::vector<PuiseuxBranch> branches;
    std::size_t i = 0;
    for (const auto& b : array_at(root["branches"], "/branches"))
      branches.push_back(branch_from_json(b, "/branches/" + std::to_string(i++)));
    job.branches = std::move(branches);
  } else {
    job.graph = graph_from_json(root["graph"], "/graph");
    if (root["graph"].contains("mode")) job.mode = mode_at(root["graph"]["mode"], "/graph/mode");
  }

  if (root.contains("ideals")) job.ideals = string_vector_at(root["ideals"], "/ideals");

  if (root.contains("filtration")) {
    const Json& f = root["filtration"];
    FiltrationSpec spec;
    if (f.is_object()) {
      allow_keys(f, {"components", "branches", "ideals"}, "/filtration");
      const std::pair<const char*, FiltrationIndex::Kind> parts[] = {{"components", FiltrationIndex::Kind::Divisorial},
                                                                     {"branches", FiltrationIndex::Kind::Curve},
                                                                     {"ideals", FiltrationIndex::Kind::Ideal}};
      for (const auto& [key, kind] : parts)
        if (f.contains(key))
          for (auto& ref : string_vector_at(f[key], std::string("/filtration/") + key)) spec.push_back({kind, ref});
    } else {
      std::size_t i = 0;
      for (const auto& x : array_at(f, "/filtration")) {
        const std::string w = "/filtration/" + std::to_string(i++);
        allow_keys(x, {"kind", "ref"}, w);
        const std::string kind = string_at(member(x, "kind", w), w + "/kind");
        FiltrationIndex idx;
        if (kind == "divisorial") idx.kind = FiltrationIndex::Kind::Divisorial;
        else if (kind == "curve") idx.kind = FiltrationIndex::Kind::Curve;
        else if (kind == "ideal") idx.kind = FiltrationIndex::Kind::Ideal;
        else fail(w + "/kind", "expected divisorial, curve or ideal");
        idx.ref = string_at(member(x, "ref", w), w + "/ref");
        spec.push_back(std::move(idx));
      }
    }
    if (spec.empty()) fail("/filtration", "no indices");
    job.filtration = std::move(spec);
  }

  if (root.contains("presentations")) {
    std::set<std::string> names;
    std::size_t i = 0;
    for (const auto& p : array_at(root["presentations"], "/presentations")) {
      const std::string w = "/presentations/" + std::to_string(i++);
      allow_keys(p, {"name", "divisorial", "curves"}, w);
      IdealPresentation ip;
      ip.name = p.contains("name") ? string_at(p["name"], w + "/name") : "I" + std::to_string(i);
      if (!names.insert(ip.name).second) fail(w + "/name", "duplicate presentation name");
      if (p.contains("divisorial")) {
        if (!p["divisorial"].is_object()) fail(w + "/divisorial", "expected an object");
        for (const auto& [id, r] : p["divisorial"].items()) ip.divisorial[id] = rational_at(r, w + "/divisorial/" + id);
      }
      if (p.contains("curves")) {
        if (!p["curves"].is_object()) fail(w + "/curves", "expected an object");
        for (const auto& [id, m] : p["curves"].items()) ip.curves[id] = integer_at(m, w + "/curves/" + id);
      }
      job.presentations.push_back(std::move(ip));
    }
  }

  if (root.contains("options")) {
    const Json& o = root["options"];
    allow_keys(o, {"truncate", "mode", "seed", "box", "extra_corner_blowups", "max_precision"}, "/options");
    if (o.contains("truncate")) {
      const int n = int_at(o["truncate"], "/options/truncate");
      if (n < 0) fail("/options/truncate", "must be nonnegative");
      job.options.truncate = n;
    }
    if (o.contains("mode")) job.mode = mode_at(o["mode"], "/options/mode");
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) fail("/options/seed", "expected a nonnegative integer");
      job.options.seed = o["seed"].get<std::uint64_t>();
    }
    if (o.contains("box")) {
      auto box = int_vector_at(o["box"], "/options/box");
      for (int b : box)
        if (b < 0) fail("/options/box", "bounds must be nonnegative");
      job.options.box = std::move(box);
    }
    if (o.contains("extra_corner_blowups")) {
      std::size_t i = 0;
      for (const auto& c : array_at(o["extra_corner_blowups"], "/options/extra_corner_blowups")) {
        const std::string w = "/options/extra_corner_blowups/" + std::to_string(i++);
        if (!c.is_array() || c.size() != 2) fail(w, "expected [component, component]");
        job.options.extra_corner_blowups.emplace_back(string_at(c[0], w + "/0"), string_at(c[1], w + "/1"));
      }
    }
    if (o.contains("max_precision")) {
      job.options.max_precision = int_at(o["max_precision"], "/options/max_precision");
      if (job.options.max_precision < 8) fail("/options/max_precision", "must be at least 8");
    }
  }
  if (job.branches && job.mode != GraphMode::PlaneCurve) fail("/options/mode", "branches live in the plane-curve mode");
  return job;
}

Geometry build_geometry(const Job& job) {
  Geometry geo;
  geo.mode = job.mode;
  if (job.branches) {
    ResolveOptions opts;
    opts.max_precision = job.options.max_precision;
    opts.initial_precision = std::min(opts.initial_precision, opts.max_precision);
    opts.extra_corner_blowups = job.options.extra_corner_blowups;
    geo.curve = resolve(*job.branches, opts);
    geo.graph = geo.curve->graph;
  } else {
    geo.graph = *job.graph;
    for (const auto& [a, b] : job.options.extra_corner_blowups) {
      std::size_t n = geo.graph.size() + 1;
      while (geo.graph.has_component("E" + std::to_string(n))) ++n;
      geo.graph = blow_up_corner(geo.graph, a, b, "E" + std::to_string(n));
    }
  }
  validate(geo.graph, geo.mode);
  return geo;
}

}  // namespace singpoincare
