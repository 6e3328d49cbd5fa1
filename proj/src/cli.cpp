#include "singpoincare/cli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "singpoincare/equivariant.hpp"
#include "singpoincare/ideal_calculus.hpp"
#include "singpoincare/job.hpp"
#include "singpoincare/oracle.hpp"
#include "singpoincare/poincare_engine.hpp"

namespace singpoincare {

namespace {

struct Mismatch {};

struct Context {
  const CliRequest& request;
  Job job;
  int truncate = kDefaultTruncation;
  std::ostringstream out;
  Json json = Json::object();
  bool text() const { return request.format == "text"; }
};

void usage(const std::string& what) { throw JobError("usage: " + what); }

std::string index_lines(const std::vector<std::string>& names, const std::vector<std::string>& labels) {
  std::string s = "indices:";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : " ") + names[i] + " = " + labels[i];
  return s + "\n";
}

FiltrationSpec index_spec(const Context& ctx, const ResolutionGraph& g) {
  if (ctx.job.filtration) return *ctx.job.filtration;
  std::vector<std::string> names = ctx.job.ideals;
  if (names.empty())
    for (const auto& spec : g.ideals) names.push_back(spec.name);
  if (names.empty()) throw JobError("job: no 'filtration', 'ideals' or ideal specs to work with");
  FiltrationSpec spec;
  for (auto& n : names) spec.push_back({FiltrationIndex::Kind::Ideal, n});
  return spec;
}

std::vector<std::string> labels_of(const FiltrationSpec& spec) {
  std::vector<std::string> out;
  for (const auto& i : spec) out.push_back(i.ref);
  return out;
}

Json spec_json(const FiltrationSpec& spec) {
  Json a = Json::array();
  for (const auto& i : spec) a.push_back({{"kind", to_string(i.kind)}, {"ref", i.ref}});
  return a;
}

void emit_form(Context& ctx, const std::string& label, const FactorForm& f, const std::string& key,
               std::size_t tag_width = 0) {
  const auto names = default_variable_names(f.variables());
  if (ctx.text()) ctx.out << label << " = " << to_text(f, names, tag_width) << "\n";
  ctx.json[key] = to_json(f);
}

void emit_series(Context& ctx, const std::string& label, const IntSeries& s, const std::string& key) {
  const auto names = default_variable_names(s.variables());
  if (ctx.text()) ctx.out << label << " to total degree " << s.truncation().total << ": " << to_text(s, names) << "\n";
  ctx.json[key] = to_json(s);
}

void cmd_resolve(Context& ctx, const Geometry& geo) {
  if (!geo.curve) throw JobError("job: resolve needs a 'branches' section");
  const ResolvedCurve& rc = *geo.curve;
  const EulerData euler = euler_data(rc.graph);
  if (ctx.request.format == "dot") {
    ctx.out << to_dot(rc.graph, euler);
    return;
  }
  ctx.json["graph"] = to_json(rc.graph, geo.mode);
  Json chi = Json::object(), vals = Json::object(), seqs = Json::object(), ends = Json::object();
  for (const auto& c : rc.graph.components) chi[c.id] = euler.chi.at(c.id);
  for (const auto& b : rc.branches) {
    Json v = Json::object();
    const auto& column = rc.valuations.at(b.name);
    for (std::size_t p = 0; p < rc.tree.size(); ++p) v[rc.tree.point(p).id] = column[p].get_si();
    vals[b.name] = v;
    seqs[b.name] = rc.multiplicity_sequences.at(b.name);
    const BranchEnd& end = rc.ends.at(b.name);
    ends[b.name] = {{"component", rc.tree.point(end.component).id},
                    {"slope", end.slope ? Json(end.slope->get_str()) : Json(nullptr)}};
  }
  ctx.json["chi"] = chi;
  ctx.json["valuations"] = vals;
  ctx.json["multiplicity_sequences"] = seqs;
  ctx.json["ends"] = ends;
  if (!ctx.text()) return;

  ctx.out << "components:\n";
  for (const auto& c : rc.graph.components)
    ctx.out << "  " << c.id << "  self-intersection " << c.self_intersection << "  chi " << euler.chi.at(c.id) << "\n";
  ctx.out << "edges:";
  for (const auto& [a, b] : rc.graph.edges) ctx.out << " " << a << "-" << b;
  ctx.out << "\narrows:";
  for (const auto& a : rc.graph.arrows) ctx.out << " " << a.label << "->" << a.component;
  ctx.out << "\nvaluations:\n";
  for (const auto& b : rc.branches) {
    ctx.out << "  " << b.name << ":";
    const auto& column = rc.valuations.at(b.name);
    for (std::size_t p = 0; p < rc.tree.size(); ++p) ctx.out << " " << rc.tree.point(p).id << "=" << column[p].get_str();
    ctx.out << "\n";
  }
  ctx.out << "multiplicity sequences:\n";
  for (const auto& b : rc.branches) {
    ctx.out << "  " << b.name << ":";
    for (int m : rc.multiplicity_sequences.at(b.name)) ctx.out << " " << m;
    ctx.out << "\n";
  }
}

void cmd_series(Context& ctx, const Geometry& geo) {
  const FiltrationSpec spec = index_spec(ctx, geo.graph);
  const FiltrationData data = filtration_data(geo.graph, spec);
  const FactorForm p = poincare_from_graph(geo.graph, data.euler, data.k);
  const auto names = default_variable_names(p.variables());
  ctx.json["indices"] = spec_json(spec);
  if (ctx.text()) ctx.out << index_lines(names, labels_of(spec));

  const std::string& cmd = ctx.request.command;
  if (cmd == "poincare") {
    emit_form(ctx, "P", p, "factor_form");
    emit_series(ctx, "P", expand(p, ctx.truncate), "series");
    return;
  }
  const FactorForm strata = alexander_from_strata(geo.graph, data.euler, data.k);
  if (!(strata == p)) throw std::logic_error("strata product differs from the component product");
  const ZetaAlexander za = zeta_and_alexander(strata);
  if (cmd == "alexander") {
    emit_form(ctx, "Delta", za.alexander, "factor_form");
    emit_series(ctx, "Delta", expand(za.alexander, ctx.truncate), "series");
  } else {
    emit_form(ctx, "zeta", za.zeta, "factor_form");
    emit_series(ctx, "zeta", expand(za.zeta, ctx.truncate), "series");
  }
}

void cmd_equivariant(Context& ctx, const Geometry& geo) {
  const FiltrationSpec spec = index_spec(ctx, geo.graph);
  const FiltrationData data = filtration_data(geo.graph, spec);
  const LinkingData ld = linking_data(geo.graph);
  const FiniteAbelianGroup h = group_from_linking(ld);
  const auto alpha = characters_from_linking(geo.graph, ld);
  const FactorForm f = equivariant_poincare(geo.graph, data.euler, ld, data.k);
  const std::size_t width = geo.graph.size();
  const auto names = default_variable_names(f.variables());

  ctx.json["indices"] = spec_json(spec);
  ctx.json["d"] = ld.d.get_str();
  Json inv = Json::array();
  for (const auto& d : h.invariant_factors) inv.push_back(d.get_str());
  ctx.json["invariant_factors"] = inv;
  Json chars = Json::object();
  for (const auto& [id, chi] : alpha) chars[id] = to_json(chi);
  ctx.json["characters"] = chars;
  if (ctx.text()) {
    ctx.out << index_lines(names, labels_of(spec));
    ctx.out << "d = " << ld.d.get_str() << "\nH =";
    if (h.invariant_factors.empty()) ctx.out << " 0";
    for (std::size_t i = 0; i < h.invariant_factors.size(); ++i)
      ctx.out << (i ? " + " : " ") << "Z/" << h.invariant_factors[i].get_str();
    ctx.out << "\ncharacters:";
    for (const auto& c : geo.graph.components) ctx.out << " " << c.id << "->" << alpha.at(c.id).to_string(width);
    ctx.out << "\n";
  }
  emit_form(ctx, "P^H", f, "factor_form", width);
  const EquivariantSeries es = expand_equivariant(f, Truncation{ctx.truncate, std::nullopt});
  if (ctx.text()) ctx.out << "P^H to total degree " << ctx.truncate << ": " << to_text(es, names, width) << "\n";
  ctx.json["series"] = to_json(es);
  emit_series(ctx, "invariant part", invariant_part(es, ld.d), "invariant_part");
}

void cmd_ideal(Context& ctx, const Geometry& geo) {
  const auto& ips = ctx.job.presentations;
  if (ips.empty()) throw JobError("job: ideal needs a 'presentations' section");
  for (const auto& ip : ips) validate(ip, geo.graph, geo.mode);
  std::vector<std::string> components, branches;
  for (const auto& c : geo.graph.components) components.push_back(c.id);
  for (const auto& ip : ips)
    for (const auto& [b, m] : ip.curves)
      if (std::find(branches.begin(), branches.end(), b) == branches.end()) branches.push_back(b);
  const MixedBase base = mixed_poincare(geo.graph, components, branches);
  const FactorForm p = ips.size() == 1 ? poincare_of_ideal(ips[0], base) : poincare_of_ideal_set(ips, base);
  std::vector<std::string> labels;
  for (const auto& ip : ips) labels.push_back(ip.name);
  Json names = labels;
  ctx.json["ideals"] = names;
  if (ctx.text()) ctx.out << index_lines(default_variable_names(p.variables()), labels);
  emit_form(ctx, "P", p, "factor_form");
  emit_series(ctx, "P", expand(p, ctx.truncate), "series");
}

void cmd_oracle(Context& ctx, const Geometry& geo) {
  if (!geo.curve) throw JobError("job: the oracle needs a 'branches' section");
  const ResolvedCurve& rc = *geo.curve;
  FiltrationSpec spec;
  if (ctx.job.filtration) spec = *ctx.job.filtration;
  else
    for (const auto& b : rc.branches) spec.push_back({FiltrationIndex::Kind::Curve, b.name});
  std::vector<OracleIndex> indices;
  for (const auto& i : spec) {
    if (i.kind == FiltrationIndex::Kind::Ideal) throw JobError("job: the oracle handles divisorial and curve indices only");
    indices.push_back({i.kind == FiltrationIndex::Kind::Divisorial, i.ref});
  }
  std::vector<int> box = ctx.job.options.box.value_or(std::vector<int>(spec.size(), ctx.truncate));
  if (box.size() != spec.size()) throw JobError("/options/box: one bound per filtration index expected");
  const std::uint64_t seed = ctx.request.seed.value_or(ctx.job.options.seed.value_or(0));
  const AgreementReport report = check_divisorial(rc, indices, box, ctx.truncate, 3, seed);

  const auto names = default_variable_names(spec.size());
  ctx.json["indices"] = spec_json(spec);
  ctx.json["box"] = box;
  if (ctx.text()) ctx.out << index_lines(names, labels_of(spec));
  emit_series(ctx, "oracle", report.series, "oracle");
  if (!ctx.request.compare) return;

  const FactorForm p = filtration_poincare(rc.graph, spec);
  const IntSeries engine = expand(p, report.series.truncation());
  ctx.json["engine"] = to_json(engine);
  std::set<Monomial> keys;
  for (const auto& [m, c] : engine.terms()) keys.insert(m);
  for (const auto& [m, c] : report.series.terms()) keys.insert(m);
  for (const auto& m : keys)
    if (engine.coefficient(m) != report.series.coefficient(m)) {
      const std::string where = monomial_text(m, names);
      ctx.json["result"] = "MISMATCH";
      ctx.json["first_difference"] = {{"m", m},
                                      {"engine", engine.coefficient(m).get_str()},
                                      {"oracle", report.series.coefficient(m).get_str()}};
      if (ctx.text())
        ctx.out << "MISMATCH at " << where << ": engine " << engine.coefficient(m).get_str() << ", oracle "
                << report.series.coefficient(m).get_str() << "\n";
      throw Mismatch{};
    }
  ctx.json["result"] = "MATCH";
  if (ctx.text()) ctx.out << "MATCH\n";
}

}  // namespace

CliOutcome run_command(const CliRequest& request, const std::string& job_text) {
  static const std::vector<std::string> commands{"resolve", "poincare", "alexander", "zeta", "equivariant", "ideal", "oracle"};
  CliOutcome outcome;
  Context ctx{request, {}, kDefaultTruncation, {}, Json::object()};
  auto finish = [&] {
    outcome.out = ctx.text() || request.format == "dot" ? ctx.out.str() : ctx.json.dump(2) + "\n";
  };
  try {
    if (std::find(commands.begin(), commands.end(), request.command) == commands.end())
      usage("unknown command '" + request.command + "'");
    if (request.format != "text" && request.format != "json" && request.format != "dot")
      usage("unknown format '" + request.format + "'");
    if (request.format == "dot" && request.command != "resolve") usage("dot output is available for resolve only");
    if (request.compare && request.command != "oracle") usage("--compare applies to the oracle command");
    ctx.job = parse_job(job_text);
    ctx.truncate = request.truncate.value_or(ctx.job.options.truncate.value_or(kDefaultTruncation));
    if (ctx.truncate < 0) usage("truncation must be nonnegative");
    ctx.json["command"] = request.command;
    ctx.json["truncate"] = ctx.truncate;
    const Geometry geo = build_geometry(ctx.job);
    const std::string& cmd = request.command;
    if (cmd == "resolve") cmd_resolve(ctx, geo);
    else if (cmd == "poincare" || cmd == "alexander" || cmd == "zeta") cmd_series(ctx, geo);
    else if (cmd == "equivariant") cmd_equivariant(ctx, geo);
    else if (cmd == "ideal") cmd_ideal(ctx, geo);
    else cmd_oracle(ctx, geo);
    finish();
  } catch (const Mismatch&) {
    finish();
    outcome.exit_code = 3;
  } catch (const JobError& e) {
    outcome.exit_code = 1;
    outcome.err = std::string(e.what()) + "\n";
  } catch (const MathError& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("internal error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace singpoincare
