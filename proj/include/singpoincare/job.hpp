#pragma once

// JSON job documents and JSON renderings of graphs, factor forms and series.
// Rationals are written as strings "p/q"; integers also as strings when large.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "singpoincare/curve_resolver.hpp"
#include "singpoincare/ideal_calculus.hpp"
#include "singpoincare/poincare_engine.hpp"
#include "singpoincare/power_series.hpp"
#include "singpoincare/resolution_graph.hpp"

namespace singpoincare {

using Json = nlohmann::ordered_json;

/// Malformed job: bad syntax (with line and column) or bad structure (with a
/// JSON pointer to the offending value).
class JobError : public std::runtime_error {
 public:
  JobError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct JobOptions {
  std::optional<int> truncate;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<int>> box;
  std::vector<std::pair<std::string, std::string>> extra_corner_blowups;
  int max_precision = 2048;
};

struct Job {
  std::optional<std::vector<PuiseuxBranch>> branches;
  std::optional<ResolutionGraph> graph;
  GraphMode mode = GraphMode::PlaneCurve;
  std::vector<std::string> ideals;
  std::optional<FiltrationSpec> filtration;
  std::vector<IdealPresentation> presentations;
  JobOptions options;
};

/// Errors: JobError.
Job parse_job(std::string_view text);

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

Json to_json(const PuiseuxBranch& b);
PuiseuxBranch branch_from_json(const Json& j, const std::string& where = "/branch");

Json to_json(const ResolutionGraph& g, std::optional<GraphMode> mode = std::nullopt);
ResolutionGraph graph_from_json(const Json& j, const std::string& where = "/graph");

Json to_json(const FactorForm& f);
FactorForm factor_form_from_json(const Json& j, const std::string& where = "/factor_form");

Json to_json(const IntSeries& s);
IntSeries series_from_json(const Json& j, const std::string& where = "/series");
Json to_json(const EquivariantSeries& s);

Json to_json(const Character& chi);
Character character_from_json(const Json& j, const std::string& where = "/character");

/// Nodes labelled "id | self-intersection | chi", arrows as extra point nodes.
std::string to_dot(const ResolutionGraph& g, const EulerData& euler);

/// Geometry of a job: resolved branches or a validated graph.
struct Geometry {
  std::optional<ResolvedCurve> curve;
  ResolutionGraph graph;
  GraphMode mode = GraphMode::PlaneCurve;
};

/// Errors: MathError from resolution or validation.
Geometry build_geometry(const Job& job);

}  // namespace singpoincare
