#include "regmod/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "regmod/error.hpp"
#include "regmod/parallel.hpp"

namespace regmod {

std::uint64_t seed_from_env() {
  const char* s = std::getenv("REGMOD_SEED");
  if (!s || !*s) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  return kDefaultSeed;
}

namespace {

Params effective_params(const CatalogEntry& e, const Params& overrides) {
  Params p = e.parameters;
  for (const auto& [k, v] : overrides) p[k] = v;
  return p;
}

double get(const Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

/// Point from parameters prefix0, prefix1, ... falling back to `fallback`.
Point point_param(const Params& p, char prefix, const Point& fallback) {
  Point out = fallback;
  for (std::size_t i = 0; i < fallback.dim(); ++i) {
    out[i] = get(p, std::string(1, prefix) + std::to_string(i), fallback[i]);
  }
  return out;
}

PenaltyForm form_param(const Params& p) {
  return get(p, "form", 0.0) == 0.0 ? PenaltyForm::Geometric : PenaltyForm::Data;
}

GridSpec grid_for(const Subject& s, const RunConfig& cfg) {
  std::size_t dim = 1;
  if (const auto* m = std::get_if<SetValuedMap>(&s)) {
    dim = std::max(m->domain_dim(), m->range_dim());
  } else if (const auto* inc = std::get_if<ParamInclusion>(&s)) {
    dim = std::max(inc->ref_p.dim(), inc->ref_x.dim());
  } else {
    const auto& prob = std::get<ParamProblem>(s);
    dim = std::max(prob.ref_p().dim(), prob.ref_x().dim());
  }
  GridSpec g;
  g.region = Ball(Point(1, 0.0), 1.0);
  g.density = cfg.grid_density.value_or(default_density(dim));
  g.scheme = cfg.scheme;
  g.seed = cfg.seed;
  return g;
}

struct OpResult {
  Json json;
  std::optional<ModulusEstimate> estimate;
};

OpResult estimate_result(ModulusEstimate e) {
  Json j = as_json(e);
  return {std::move(j), std::move(e)};
}

Json duality_json(const ModulusEstimate& direct, const ModulusEstimate& dual,
                  const GridSpec& grid, const Tolerances& tol) {
  const double combined = grid_tolerance(direct, grid, tol) + grid_tolerance(dual, grid, tol);
  double diff = 0.0;
  bool agree = false;
  if (direct.verdict == Verdict::Divergent || dual.verdict == Verdict::Divergent) {
    agree = direct.verdict == dual.verdict;
    diff = agree ? 0.0 : kInfinity;
  } else {
    diff = std::abs(direct.limiting_value - dual.limiting_value);
    agree = diff <= 2.0 * combined;
  }
  return {{"usreg", as_json(direct)},
          {"ullsc_inverse", as_json(dual)},
          {"difference", number(diff)},
          {"combined_grid_tolerance", combined},
          {"agree", agree}};
}

OpResult run_mapping(const SetValuedMap& m, const std::string& op, const Params& prm,
                     const GridSpec& grid, const RunConfig& cfg) {
  const auto& tol = cfg.tol;
  const Point p = point_param(prm, 'p', m.ref_p);
  const Point x = point_param(prm, 'x', m.ref_x);
  if (op == "fiber_distance") return {{{"value", number(fiber_distance(m, p, x))}}, {}};
  if (op == "inverse_distance") {
    const auto hit = inverse_search(m, x, p, grid);
    return {{{"value", number(hit.distance)},
             {"witness", hit.witness ? as_json(*hit.witness) : Json(nullptr)},
             {"clipped", hit.clipped}},
            {}};
  }
  if (op == "hemiregularity") return estimate_result(hemiregularity_estimate(m, cfg.ladder, grid, tol));
  if (op == "uniform_hemiregularity") {
    return estimate_result(uniform_hemiregularity_estimate(m, cfg.ladder, grid, tol));
  }
  if (op == "uniform_lipschitz_lsc_inverse") {
    return estimate_result(
        uniform_lipschitz_lsc_estimate(inverse_view(m, grid), cfg.ladder, grid, tol));
  }
  if (op == "duality") {
    const auto direct = uniform_hemiregularity_estimate(m, cfg.ladder, grid, tol);
    const auto dual = uniform_lipschitz_lsc_estimate(inverse_view(m, grid), cfg.ladder, grid, tol);
    return {duality_json(direct, dual, grid, tol), {}};
  }
  if (op == "metric_regularity_witness") {
    const double kappa = get(prm, "kappa", 1.0);
    const auto form =
        get(prm, "uniform", 0.0) != 0.0 ? RegularityForm::UniformFiber : RegularityForm::Local;
    const auto w = metric_regularity_witness_search(m, kappa, cfg.ladder, grid, form, tol);
    return {{{"kappa", kappa},
             {"form", form == RegularityForm::Local ? "local" : "uniform"},
             {"found", w.has_value()},
             {"witness", w ? as_json(*w) : Json(nullptr)}},
            {}};
  }
  if (op == "convex_process_norm") return {as_json(convex_process_norm(m, grid)), {}};
  if (op == "openness") {
    return {as_json(openness_check(m, get(prm, "a", 0.5), get(prm, "delta_tilde", 0.5), grid, tol)),
            {}};
  }
  if (op == "mapping_calmness") {
    return estimate_result(mapping_calmness_estimate(m, cfg.ladder, grid, tol));
  }
  throw Error(ErrorCode::UnknownOperation, "operation '" + op + "' does not apply to a mapping");
}

OpResult run_inclusion(const ParamInclusion& inc, const std::string& op, const Params& prm,
                       const GridSpec& grid, const RunConfig& cfg) {
  const auto& tol = cfg.tol;
  const Point p = point_param(prm, 'p', inc.ref_p);
  const Point x = point_param(prm, 'x', inc.ref_x);
  if (op == "displacement") return {{{"value", number(displacement(inc, p, x))}}, {}};
  if (op == "partial_strong_slope") {
    return {as_json(partial_strong_slope(inc, p, x, cfg.ladder, grid, tol)), {}};
  }
  if (op == "strict_outer_slope") {
    return {as_json(strict_outer_slope(inc, cfg.ladder, cfg.ladder, grid, tol)), {}};
  }
  if (op == "theorem41_certificate") {
    return {as_json(theorem41_certificate(inc, {cfg.ladder, cfg.ladder, cfg.ladder}, grid, tol)),
            {}};
  }
  if (op == "lsc_probe") return {as_json(lsc_probe(inc, x, p, cfg.ladder, grid, tol.tol_lsc)), {}};
  if (op == "solution_uniform_hemiregularity") {
    return estimate_result(
        uniform_hemiregularity_estimate(solution_map(inc, grid), cfg.ladder, grid, tol));
  }
  if (op == "solution_openness") {
    return {as_json(openness_check(solution_map(inc, grid), get(prm, "a", 0.5),
                                   get(prm, "delta_tilde", 0.5), grid, tol)),
            {}};
  }
  throw Error(ErrorCode::UnknownOperation, "operation '" + op + "' does not apply to an inclusion");
}

OpResult run_problem(const ParamProblem& prob, const std::string& op, const Params& prm,
                     const GridSpec& grid, const RunConfig& cfg) {
  const auto& tol = cfg.tol;
  const Point p = point_param(prm, 'p', prob.ref_p());
  const Point x = point_param(prm, 'x', prob.ref_x());
  const double l = get(prm, "l", 1.0);
  if (op == "displacement") return {{{"value", number(displacement(prob.constraint, p, x))}}, {}};
  if (op == "parameterization_validity") {
    return {as_json(parameterization_validity(prob, cfg.ladder, grid)), {}};
  }
  if (op == "problem_calmness") {
    return estimate_result(problem_calmness_estimate(prob, cfg.ladder, grid, tol));
  }
  if (op == "mapping_calmness") {
    return estimate_result(
        mapping_calmness_estimate(solution_map(prob.constraint, grid), cfg.ladder, grid, tol));
  }
  if (op == "penalty_value") {
    return {{{"value", number(penalty_value(prob, l, form_param(prm), p, x, grid))}}, {}};
  }
  if (op == "exactness") {
    const double radius = get(prm, "check_radius", std::min(prob.local_opt_radius, 0.5));
    return {as_json(exactness_verify(prob, l, form_param(prm), radius, grid)), {}};
  }
  if (op == "exact_threshold") {
    return {as_json(exact_threshold(prob, {cfg.ladder, cfg.ladder, cfg.ladder}, grid, tol)), {}};
  }
  if (op == "calmness_inference") {
    return {as_json(calmness_inference_check(prob, l, cfg.ladder, grid, tol)), {}};
  }
  throw Error(ErrorCode::UnknownOperation, "operation '" + op + "' does not apply to a problem");
}

Json params_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

}  // namespace

Json RunReport::to_json(bool with_timing) const {
  Json ex = Json::array();
  for (const auto& e : expectations) {
    ex.push_back({{"expected", e.expected},
                  {"provenance", std::string(regmod::to_string(e.provenance))},
                  {"citation", e.citation},
                  {"passed", e.passed}});
  }
  Json j = {{"schema_version", kSchemaVersion},
            {"entry", entry},
            {"operation", operation},
            {"config", config},
            {"result", result},
            {"error", error ? Json(*error) : Json(nullptr)},
            {"expectations", ex},
            {"passed", passed}};
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

RunReport run_entry(const std::string& name, const std::string& operation,
                    const RunConfig& config) {
  const auto& entry = find_entry(name);
  const auto& ops = operations_for(entry.kind);
  if (std::find(ops.begin(), ops.end(), operation) == ops.end()) {
    throw Error(ErrorCode::UnknownOperation, "operation '" + operation + "' is not available for " +
                                                 std::string(to_string(entry.kind)) + " entries");
  }
  config.ladder.validate();
  const Params prm = effective_params(entry, config.params);

  RunReport rep;
  rep.entry = entry.name;
  rep.operation = operation;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Subject subject = entry.build(prm);
    const GridSpec grid = grid_for(subject, config);
    rep.config = {{"grid", as_json(grid)},
                  {"ladder", as_json(config.ladder)},
                  {"tolerances", as_json(config.tol)},
                  {"params", params_json(prm)}};
    OpResult out = std::visit(
        [&](const auto& s) -> OpResult {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SetValuedMap>) {
            return run_mapping(s, operation, prm, grid, config);
          } else if constexpr (std::is_same_v<T, ParamInclusion>) {
            return run_inclusion(s, operation, prm, grid, config);
          } else {
            return run_problem(s, operation, prm, grid, config);
          }
        },
        subject);
    rep.result = std::move(out.json);
    if (out.estimate) {
      rep.estimate = std::move(*out.estimate);
      rep.has_estimate = true;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownOperation) throw;
    rep.error = e.what();
    rep.result = nullptr;
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& ex : entry.expected) {
    if (ex.operation != operation || effective_params(entry, ex.params) != prm) continue;
    ExpectationOutcome o{ex.expected, ex.provenance, ex.citation, false};
    if (!rep.error) {
      try {
        o.passed = ex.check(rep.result);
      } catch (const std::exception&) {
        o.passed = false;
      }
    }
    rep.passed = rep.passed && o.passed;
    rep.expectations.push_back(std::move(o));
  }
  if (rep.error) rep.passed = false;
  return rep;
}

Json VerifyAllReport::to_json(bool with_timing) const {
  Json arr = Json::array();
  std::size_t failed = 0;
  for (const auto& r : runs) {
    arr.push_back(r.to_json(with_timing));
    failed += r.passed ? 0 : 1;
  }
  return {{"schema_version", kSchemaVersion},
          {"passed", passed},
          {"total", runs.size()},
          {"failed", failed},
          {"runs", arr}};
}

VerifyAllReport verify_all(const RunConfig& base, bool parallel) {
  struct Job {
    std::string entry, op;
    Params params;
  };
  std::vector<Job> jobs;
  for (const auto& e : catalog()) {
    for (const auto& ex : e.expected) {
      Params merged = base.params;
      for (const auto& [k, v] : ex.params) merged[k] = v;
      const bool seen = std::any_of(jobs.begin(), jobs.end(), [&](const Job& j) {
        return j.entry == e.name && j.op == ex.operation && j.params == merged;
      });
      if (!seen) jobs.push_back({e.name, ex.operation, merged});
    }
  }
  auto run = [&](std::size_t i) {
    RunConfig cfg = base;
    cfg.params = jobs[i].params;
    return run_entry(jobs[i].entry, jobs[i].op, cfg);
  };
  VerifyAllReport rep;
  if (parallel) {
    rep.runs = parallel_map<RunReport>(jobs.size(), run);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) rep.runs.push_back(run(i));
  }
  rep.passed = std::all_of(rep.runs.begin(), rep.runs.end(),
                           [](const RunReport& r) { return r.passed; });
  return rep;
}

}  // namespace regmod
