#include "regmod/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "regmod/error.hpp"

namespace regmod {

namespace {

Point pt(double a) { return Point{a}; }
Point pt(double a, double b) { return Point{a, b}; }

SetValuedMap single_valued(std::string name, std::function<double(const Point&)> theta,
                           Ball domain, Ball range, Point p_ref, Point x_ref) {
  SetValuedMap m;
  m.name = std::move(name);
  m.fiber = [theta](const Point& p, const Point& x) { return std::abs(x[0] - theta(p)); };
  m.domain_region = std::move(domain);
  m.range_region = std::move(range);
  m.ref_p = std::move(p_ref);
  m.ref_x = std::move(x_ref);
  return m;
}

ParamInclusion scalar_inclusion(std::string name, std::function<double(double, double)> value,
                                Ball p_region, Ball x_region) {
  ParamInclusion inc;
  inc.name = std::move(name);
  inc.set_distance = [value](const Point& p, const Point& x, const Point& y) {
    return std::abs(y[0] - value(p[0], x[0]));
  };
  inc.omega = pt(0.0);
  inc.p_region = std::move(p_region);
  inc.x_region = std::move(x_region);
  inc.y_region = Ball(pt(0.0), 10.0);
  inc.ref_p = pt(0.0);
  inc.ref_x = pt(0.0);
  return inc;
}

/// Roots of the monic quartic t^4 + c[0] t^3 + c[1] t^2 + c[2] t + c[3].
std::array<std::complex<double>, 4> quartic_roots(const std::array<double, 4>& c) {
  using C = std::complex<double>;
  auto f = [&](C t) { return (((t + c[0]) * t + c[1]) * t + c[2]) * t + c[3]; };
  double bound = 1.0;
  for (double a : c) bound = std::max(bound, 1.0 + std::abs(a));
  std::array<C, 4> z;
  const C seed(0.4, 0.9);
  C w = seed;
  for (auto& zi : z) {
    zi = w * (bound * 0.5);
    w *= seed;
  }
  for (int it = 0; it < 500; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      C den(1.0, 0.0);
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (std::abs(den) == 0.0) den = C(1e-300, 0.0);
      const C step = f(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-16 * bound) break;
  }
  return z;
}

}  // namespace

double hyperbola_distance(double p, const Point& x) {
  const double a = x[0];
  const double b = x[1];
  if (p == 0.0) return std::min(std::abs(a), std::abs(b));
  // stationary points (t, p/t) of the squared distance solve
  // t^4 - a t^3 + b p t - p^2 = 0
  const std::array<double, 4> c{-a, 0.0, b * p, -p * p};
  auto g = [&](double t) { return (((t + c[0]) * t + c[1]) * t + c[2]) * t + c[3]; };
  auto dg = [&](double t) { return ((4.0 * t + 3.0 * c[0]) * t + 2.0 * c[1]) * t + c[2]; };
  double best = kInfinity;
  for (const auto& root : quartic_roots(c)) {
    double t = root.real();
    for (int i = 0; i < 8; ++i) {
      const double d = dg(t);
      if (d == 0.0) break;
      const double next = t - g(t) / d;
      if (!std::isfinite(next) || next == 0.0) break;
      t = next;
    }
    if (t == 0.0) continue;
    best = std::min(best, std::hypot(t - a, p / t - b));
  }
  return best;
}

SetValuedMap ex21_branch_parabola() {
  return single_valued(
      "ex21_branch_parabola",
      [](const Point& p) { return p[0] >= 0.0 ? p[0] + p[1] * p[1] : p[0] - p[1] * p[1]; },
      Ball(pt(0.0, 0.0), 2.0), Ball(pt(0.0), 2.0), pt(0.0, 0.0), pt(0.0));
}

SetValuedMap ex22_hyperbola() {
  SetValuedMap m;
  m.name = "ex22_hyperbola";
  m.fiber = [](const Point& p, const Point& x) { return hyperbola_distance(p[0], x); };
  m.residual = [](const Point& p, const Point& x) { return std::abs(x[0] * x[1] - p[0]); };
  m.domain_region = Ball(pt(0.0), 2.0);
  m.range_region = Ball(pt(0.0, 0.0), 2.0);
  m.ref_p = pt(0.0);
  m.ref_x = pt(0.0, 0.0);
  return m;
}

SetValuedMap linear_onto() {
  return single_valued(
      "linear_onto", [](const Point& p) { return p[0] + 2.0 * p[1]; }, Ball(pt(0.0, 0.0), 2.0),
      Ball(pt(0.0), 2.0), pt(0.0, 0.0), pt(0.0));
}

SetValuedMap identity_map() {
  return single_valued(
      "identity_map", [](const Point& p) { return p[0]; }, Ball(pt(0.0), 2.0), Ball(pt(0.0), 2.0),
      pt(0.0), pt(0.0));
}

SetValuedMap cubic_map() {
  return single_valued(
      "cubic_map", [](const Point& p) { return p[0] * p[0] * p[0]; }, Ball(pt(0.0), 2.0),
      Ball(pt(0.0), 2.0), pt(0.0), pt(0.0));
}

SetValuedMap cone_pair_map() {
  SetValuedMap m;
  m.name = "cone_pair_map";
  m.fiber = [](const Point& p, const Point& x) {
    return std::min(std::abs(x[0] - p[0]), std::abs(x[0] + p[0]));
  };
  m.domain_region = Ball(pt(0.0), 2.0);
  m.range_region = Ball(pt(0.0), 2.0);
  m.ref_p = pt(0.0);
  m.ref_x = pt(0.0);
  return m;
}

SetValuedMap halfline_map() {
  SetValuedMap m;
  m.name = "halfline_map";
  m.fiber = [](const Point& p, const Point& x) { return std::max(p[0] - x[0], 0.0); };
  m.domain_region = Ball(pt(0.0), 2.0);
  m.range_region = Ball(pt(0.0), 2.0);
  m.ref_p = pt(0.0);
  m.ref_x = pt(0.0);
  return m;
}

ParamInclusion affine_inclusion(double c) {
  if (!std::isfinite(c) || c == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "affine_inclusion needs a nonzero finite c");
  }
  return scalar_inclusion(
      "affine_inclusion", [c](double p, double x) { return c * p - x; }, Ball(pt(0.0), 1.0),
      Ball(pt(0.0), 2.0));
}

ParamInclusion cubic_inclusion() {
  return scalar_inclusion(
      "cubic_inclusion", [](double p, double x) { return p * p * p - x; }, Ball(pt(0.0), 1.0),
      Ball(pt(0.0), 2.0));
}

ParamInclusion quadratic_inclusion() {
  return scalar_inclusion(
      "quadratic_inclusion", [](double p, double x) { return (p - x) * (p - x); },
      Ball(pt(0.0), 1.0), Ball(pt(0.0), 2.0));
}

ParamInclusion shift_inclusion() {
  return scalar_inclusion(
      "shift_inclusion", [](double p, double x) { return std::max(p - x, 0.0); },
      Ball(pt(0.0), 1.0), Ball(pt(0.0), 2.0));
}

ParamInclusion sqrt_constraint(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  }
  return scalar_inclusion(
      "sqrt_constraint",
      [beta](double p, double x) { return std::max(x - std::pow(std::abs(p), beta), 0.0); },
      Ball(pt(0.0), 1.0), Ball(pt(0.0), 1.0));
}

ParamInclusion step_up_inclusion() {
  return scalar_inclusion(
      "step_up_inclusion", [](double p, double) { return p <= 0.0 ? 0.0 : 1.0; },
      Ball(pt(0.0), 1.0), Ball(pt(0.0), 1.0));
}

ParamInclusion step_down_inclusion() {
  auto inc = scalar_inclusion(
      "step_down_inclusion", [](double p, double) { return p <= 0.0 ? 1.0 : 0.0; },
      Ball(pt(0.0), 1.0), Ball(pt(0.0), 1.0));
  inc.ref_p = pt(0.5);
  return inc;
}

ParamProblem shift_halfline() {
  ParamProblem prob;
  prob.name = "shift_halfline";
  prob.objective = [](const Point& x) { return x[0]; };
  prob.constraint = shift_inclusion();
  prob.local_opt_radius = 0.5;
  return prob;
}

ParamProblem ex31_sqrt_problem(double beta) {
  ParamProblem prob;
  prob.name = "ex31_sqrt_problem";
  prob.objective = [](const Point& x) {
    return x[0] <= 0.0 ? std::sqrt(-x[0]) : -std::sqrt(x[0]);
  };
  prob.constraint = sqrt_constraint(beta);
  prob.local_opt_radius = 0.5;
  return prob;
}

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Mapping: return "mapping";
    case EntryKind::Inclusion: return "inclusion";
    case EntryKind::Problem: return "problem";
  }
  return "unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "unknown";
}

namespace {

using Check = std::function<bool(const Json&)>;

double at(const Json& r, const std::string& ptr) {
  return number_from(r.at(Json::json_pointer(ptr)));
}

Check near(std::string ptr, double v, double abs_tol) {
  return [=](const Json& r) { return std::abs(at(r, ptr) - v) <= abs_tol; };
}

Check relative(std::string ptr, double v, double rel_tol) {
  return [=](const Json& r) { return std::abs(at(r, ptr) - v) <= rel_tol * std::abs(v); };
}

Check at_most(std::string ptr, double v) {
  return [=](const Json& r) { return at(r, ptr) <= v; };
}

Check is_true(std::string ptr) {
  return [=](const Json& r) { return r.at(Json::json_pointer(ptr)).get<bool>(); };
}

Check is_false(std::string ptr) {
  return [=](const Json& r) { return !r.at(Json::json_pointer(ptr)).get<bool>(); };
}

Check equals(std::string ptr, std::string v) {
  return [=](const Json& r) { return r.at(Json::json_pointer(ptr)).get<std::string>() == v; };
}

Check all_of(std::vector<Check> cs) {
  return [cs = std::move(cs)](const Json& r) {
    return std::all_of(cs.begin(), cs.end(), [&](const Check& c) { return c(r); });
  };
}

Check verdict(std::string v) { return equals("/verdict", std::move(v)); }

/// Every rung's supremum stays within radius + slack.
Check rungs_below_radius(double slack) {
  return [=](const Json& r) {
    for (const auto& rung : r.at("per_rung")) {
      if (number_from(rung.at("supremum_value")) > rung.at("radius").get<double>() + slack) {
        return false;
      }
    }
    return true;
  };
}

/// A regularity witness with both points inside the given ball around the reference.
Check witness_within(double radius, const Point& p_ref, const Point& x_ref) {
  return [=](const Json& r) {
    if (!r.at("found").get<bool>()) return false;
    const auto& w = r.at("witness");
    auto dist = [](const Json& a, const Point& b) {
      double s = 0.0;
      for (std::size_t i = 0; i < b.dim(); ++i) {
        const double d = a.at(i).get<double>() - b[i];
        s += d * d;
      }
      return std::sqrt(s);
    };
    return dist(w.at("p"), p_ref) <= radius && dist(w.at("x"), x_ref) <= radius;
  };
}

Check level_exact(std::string form, double level, bool exact) {
  return [=](const Json& r) {
    for (const auto& l : r.at("verified_levels")) {
      if (l.at("form").get<std::string>() == form &&
          std::abs(l.at("level").get<double>() - level) <= 1e-9 * (1.0 + level)) {
        return l.at("exact").get<bool>() == exact;
      }
    }
    return false;
  };
}

Expectation paper(std::string op, Params params, std::string expected, std::string citation,
                  Check check) {
  return {std::move(op), std::move(params), std::move(expected), Provenance::Paper,
          std::move(citation), std::move(check)};
}

Expectation derived(std::string op, Params params, std::string expected, Check check) {
  return {std::move(op), std::move(params), std::move(expected), Provenance::Derived, "",
          std::move(check)};
}

Expectation trivial(std::string op, Params params, std::string expected, Check check) {
  return {std::move(op), std::move(params), std::move(expected), Provenance::Trivial, "",
          std::move(check)};
}

Expectation duality() {
  return paper("duality", {}, "usreg(Theta) and uLlsc(Theta^-1) agree within 2x grid tolerance",
               "Proposition 2.1, \"usreg{Theta}{(p,x)} = uLlsc{Theta^-1}{(x,p)}\"",
               is_true("/agree"));
}

double param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorCode::InvalidArgument, "missing parameter " + key);
  return it->second;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const double inv_sqrt5 = 1.0 / std::sqrt(5.0);

  c.push_back({"ex21_branch_parabola", EntryKind::Mapping, "branch_parabola",
               "Theta(p) = p1 + p2^2 if p1 >= 0, p1 - p2^2 otherwise, at ((0,0), 0)",
               {},
               [](const Params&) -> Subject { return ex21_branch_parabola(); },
               {derived("hemiregularity", {}, "limiting value 1.0 +- 0.05",
                        all_of({verdict("finite"), near("/limiting_value", 1.0, 0.05)})),
                paper("metric_regularity_witness", {{"kappa", 1.0}},
                      "violating pair within the 0.1-ball",
                      "Example 2.1, \"the inequality ... is evidently false\"",
                      witness_within(0.1, pt(0.0, 0.0), pt(0.0))),
                paper("metric_regularity_witness", {{"kappa", 10.0}},
                      "violating pair within the 0.1-ball",
                      "Example 2.1, \"the inequality ... is evidently false\"",
                      witness_within(0.1, pt(0.0, 0.0), pt(0.0))),
                paper("metric_regularity_witness", {{"kappa", 100.0}},
                      "violating pair within the 0.1-ball",
                      "Example 2.1, \"the inequality ... is evidently false\"",
                      witness_within(0.1, pt(0.0, 0.0), pt(0.0))),
                paper("fiber_distance", {{"p0", 0.0}, {"p1", 0.1}, {"x0", 0.0}},
                      "dist(0, Theta(0, 0.1)) = 0.01",
                      "Example 2.1, \"kappa xi^2 = kappa dist{x}{Theta(p)}\"",
                      near("/value", 0.01, 1e-12)),
                derived("inverse_distance", {{"p0", 0.0}, {"p1", 0.1}, {"x0", 0.0}},
                        "dist((0, 0.1), Theta^-1(0)) = 0.1", near("/value", 0.1, 1e-3)),
                duality()}});

  c.push_back({"ex22_hyperbola", EntryKind::Mapping, "hyperbola",
               "Theta(p) = {x in R^2 : x1 x2 = p}, at (0, (0,0))",
               {},
               [](const Params&) -> Subject { return ex22_hyperbola(); },
               {derived("uniform_hemiregularity", {},
                        "per-rung value <= radius + 0.02 and limiting value <= 0.05",
                        all_of({rungs_below_radius(0.02), at_most("/limiting_value", 0.05)})),
                paper("fiber_distance", {{"p0", 0.0}, {"x0", 0.5}, {"x1", 0.2}},
                      "dist((0.5, 0.2), Theta(0)) = 0.2",
                      "Example 2.2, \"min{|x1|,|x2|} = dist{x}{Theta(0)}\"",
                      near("/value", 0.2, 1e-12)),
                paper("inverse_distance", {{"p0", 0.0}, {"x0", 0.5}, {"x1", 0.2}},
                      "dist(0, Theta^-1(0.5, 0.2)) = 0.1",
                      "Example 2.2, \"dist{0}{Theta^-1(x)} = |x1 x2|\"",
                      near("/value", 0.1, 1e-3)),
                paper("metric_regularity_witness", {{"kappa", 0.5}, {"uniform", 1.0}},
                      "violating pair found", "Example 2.2, \"Theta has been shown to do not "
                      "satisfy condition (2.4)\"",
                      is_true("/found")),
                paper("metric_regularity_witness", {{"kappa", 1.0}, {"uniform", 1.0}},
                      "violating pair found", "Example 2.2, \"Theta has been shown to do not "
                      "satisfy condition (2.4)\"",
                      is_true("/found")),
                derived("openness", {{"a", 0.5}, {"delta_tilde", 0.5}}, "openness holds",
                        is_true("/holds")),
                duality()}});

  c.push_back({"linear_onto", EntryKind::Mapping, "linear_1_2",
               "Lambda(p) = p1 + 2 p2, at ((0,0), 0)",
               {},
               [](const Params&) -> Subject { return linear_onto(); },
               {derived("uniform_hemiregularity", {}, "limiting value 1/sqrt(5) +- 5%",
                        all_of({verdict("finite"), relative("/limiting_value", inv_sqrt5, 0.05)})),
                derived("convex_process_norm", {}, "norm 1/sqrt(5) +- 5%",
                        relative("/value", inv_sqrt5, 0.05)),
                duality()}});

  c.push_back({"identity_map", EntryKind::Mapping, "identity", "Theta(p) = {p}, at (0, 0)",
               {},
               [](const Params&) -> Subject { return identity_map(); },
               {trivial("hemiregularity", {}, "limiting value 1.0",
                        all_of({verdict("finite"), near("/limiting_value", 1.0, 0.05)})),
                trivial("metric_regularity_witness", {{"kappa", 2.0}}, "no violating pair",
                        is_false("/found")),
                trivial("convex_process_norm", {}, "norm 1.0", near("/value", 1.0, 0.05)),
                trivial("openness", {{"a", 1.0}, {"delta_tilde", 0.5}}, "openness holds",
                        is_true("/holds")),
                duality()}});

  c.push_back({"cubic_map", EntryKind::Mapping, "cubic", "Theta(p) = {p^3}, at (0, 0)",
               {},
               [](const Params&) -> Subject { return cubic_map(); },
               {derived("hemiregularity", {}, "divergent", verdict("divergent")),
                derived("openness", {{"a", 1.0}, {"delta_tilde", 0.5}}, "openness fails",
                        is_false("/holds")),
                duality()}});

  c.push_back({"cone_pair_map", EntryKind::Mapping, "cone_pair", "Theta(p) = {p, -p}, at (0, 0)",
               {},
               [](const Params&) -> Subject { return cone_pair_map(); },
               {derived("convex_process_norm", {}, "norm 1.0", near("/value", 1.0, 0.05)),
                duality()}});

  c.push_back({"halfline_map", EntryKind::Mapping, "halfline", "Theta(p) = [p, inf), at (0, 0)",
               {},
               [](const Params&) -> Subject { return halfline_map(); },
               {derived("mapping_calmness", {}, "limiting value 1.0",
                        all_of({verdict("finite"), near("/limiting_value", 1.0, 0.05)})),
                duality()}});

  auto affine_cert = [](double cv) {
    const double b = 1.0 / std::abs(cv);
    return derived("theorem41_certificate", {{"c", cv}},
                   "bound 1/|c| +- 10% and direct usreg(R) within 10% of the bound",
                   all_of({equals("/status", "issued"), relative("/bound", b, 0.10),
                           relative("/direct_usreg_r/limiting_value", b, 0.10),
                           is_true("/bound_respected")}));
  };
  c.push_back({"affine_inclusion", EntryKind::Inclusion, "affine",
               "F(p,x) = {c p - x}, omega = 0, at (0, 0)",
               {{"c", 1.0}},
               [](const Params& p) -> Subject { return affine_inclusion(param(p, "c")); },
               {affine_cert(0.5), affine_cert(1.0), affine_cert(2.0),
                trivial("displacement", {{"p0", 0.4}, {"x0", 0.1}}, "disp(0.4, 0.1) = 0.3",
                        near("/value", 0.3, 1e-12)),
                derived("partial_strong_slope", {{"p0", 0.4}, {"x0", 0.1}}, "slope 1.0",
                        near("/value", 1.0, 0.05)),
                trivial("partial_strong_slope", {{"p0", 0.1}, {"x0", 0.1}},
                        "local minimizer, slope 0",
                        all_of({is_true("/is_local_min"), near("/value", 0.0, 0.0)})),
                derived("strict_outer_slope", {}, "outer slope 1.0", near("/value", 1.0, 0.05)),
                derived("strict_outer_slope", {{"c", 2.0}}, "outer slope 2.0",
                        near("/value", 2.0, 0.10)),
                trivial("lsc_probe", {{"p0", 0.0}, {"x0", 0.0}}, "no violation",
                        [](const Json& r) { return r.at("violation").is_null(); })}});

  c.push_back({"cubic_inclusion", EntryKind::Inclusion, "cubic",
               "F(p,x) = {p^3 - x}, omega = 0, at (0, 0)",
               {},
               [](const Params&) -> Subject { return cubic_inclusion(); },
               {derived("theorem41_certificate", {},
                        "hypothesis (iv) fails and direct usreg(R) is divergent",
                        all_of({equals("/status", "hypothesis_iv_fails"),
                                equals("/direct_usreg_r/verdict", "divergent")})),
                derived("solution_openness", {{"a", 1.0}, {"delta_tilde", 0.5}},
                        "openness fails for small r", is_false("/holds"))}});

  c.push_back({"quadratic_inclusion", EntryKind::Inclusion, "quadratic",
               "F(p,x) = {(p - x)^2}, omega = 0, at (0, 0)",
               {},
               [](const Params&) -> Subject { return quadratic_inclusion(); },
               {derived("partial_strong_slope", {{"p0", 0.4}, {"x0", 0.1}}, "slope 0.6 +- 5%",
                        relative("/value", 0.6, 0.05))}});

  c.push_back({"step_up_inclusion", EntryKind::Inclusion, "step_up",
               "F(p,x) = {0} for p <= 0, {1} otherwise; omega = 0",
               {},
               [](const Params&) -> Subject { return step_up_inclusion(); },
               {derived("lsc_probe", {{"p0", 0.0}, {"x0", 0.0}}, "no violation at p = 0",
                        [](const Json& r) { return r.at("violation").is_null(); })}});

  c.push_back({"step_down_inclusion", EntryKind::Inclusion, "step_down",
               "F(p,x) = {1} for p <= 0, {0} otherwise; omega = 0, at (0.5, 0)",
               {},
               [](const Params&) -> Subject { return step_down_inclusion(); },
               {derived("lsc_probe", {{"p0", 0.0}, {"x0", 0.0}}, "violation flagged at p = 0",
                        [](const Json& r) { return !r.at("violation").is_null(); })}});

  c.push_back({"shift_halfline", EntryKind::Problem, "shift_halfline",
               "min x subject to x in [p, inf); F(p,x) = {max(p - x, 0)}, at (0, 0)",
               {},
               [](const Params&) -> Subject { return shift_halfline(); },
               {derived("exact_threshold", {},
                        "threshold_T31 = 1.0 +- 0.1; exact at 1.2, not exact at 0.5",
                        all_of({near("/threshold_t31", 1.0, 0.1),
                                [](const Json& r) {
                                  const double t = number_from(r.at("threshold_t31"));
                                  return level_exact("geometric", 1.2 * t, true)(r) &&
                                         level_exact("geometric", 0.5 * t, false)(r);
                                }})),
                derived("exact_threshold", {},
                        "threshold_C41 finite and >= minimal exact level - 10%",
                        [](const Json& r) {
                          const double t = number_from(r.at("threshold_c41"));
                          const double m = number_from(r.at("minimal_exact_data"));
                          return std::isfinite(t) && t >= m * 0.9;
                        }),
                derived("problem_calmness", {}, "limiting value 1.0",
                        all_of({verdict("finite"), near("/limiting_value", 1.0, 0.05)})),
                derived("penalty_value", {{"l", 1.5}, {"p0", 0.0}, {"x0", -0.2}},
                        "phi_l = 0.1", near("/value", 0.1, 1e-3)),
                trivial("penalty_value", {{"l", 1.5}, {"p0", 0.0}, {"x0", 0.3}},
                        "phi_l = 0.3", near("/value", 0.3, 1e-12)),
                derived("exactness", {{"l", 1.5}}, "exact", is_true("/exact")),
                derived("exactness", {{"l", 0.5}}, "not exact, witness x < 0",
                        [](const Json& r) {
                          return !r.at("exact").get<bool>() &&
                                 r.at("witness").at(0).get<double>() < 0.0;
                        }),
                trivial("parameterization_validity", {}, "condition (ii) holds",
                        is_true("/condition_ii")),
                derived("calmness_inference", {{"l", 1.5}}, "mapping calm, exact, pcalm finite",
                        all_of({equals("/mapping_calm/verdict", "finite"), is_true("/exact_at_l"),
                                equals("/pcalm_direct/verdict", "finite"),
                                is_true("/consistent")}))}});

  const std::string ex31_cite = "Example 3.1, \"calm at x with respect to R_beta iff beta >= 2\"";
  c.push_back({"ex31_sqrt_problem", EntryKind::Problem, "sqrt_branch",
               "phi(x) = sqrt(-x) for x <= 0, -sqrt(x) otherwise; R_beta(p) = (-inf, |p|^beta]",
               {{"beta", 2.0}},
               [](const Params& p) -> Subject { return ex31_sqrt_problem(param(p, "beta")); },
               {paper("problem_calmness", {{"beta", 2.0}}, "limiting value 1.0 +- 0.05",
                      "Example 3.1, quotient \"-|p|^{beta/2-1}\"",
                      all_of({verdict("finite"), near("/limiting_value", 1.0, 0.05)})),
                paper("problem_calmness", {{"beta", 1.0}}, "divergent", ex31_cite,
                      verdict("divergent")),
                paper("problem_calmness", {{"beta", 1.5}}, "divergent", ex31_cite,
                      verdict("divergent")),
                derived("displacement", {{"beta", 2.0}, {"p0", 0.1}, {"x0", 0.02}},
                        "disp(0.1, 0.02) = 0.01", near("/value", 0.01, 1e-12)),
                derived("penalty_value", {{"l", 5.0}, {"p0", 0.0}, {"x0", 0.04}}, "phi_l = 0.0",
                        near("/value", 0.0, 1e-3)),
                derived("exactness", {{"l", 1.0}}, "not exact", is_false("/exact")),
                derived("exactness", {{"l", 10.0}}, "not exact", is_false("/exact")),
                derived("exactness", {{"l", 100.0}}, "not exact", is_false("/exact")),
                derived("parameterization_validity", {{"beta", 1.0}}, "condition (ii) holds",
                        is_true("/condition_ii")),
                derived("mapping_calmness", {}, "limiting value 0",
                        all_of({verdict("finite"), near("/limiting_value", 0.0, 0.01)})),
                derived("exact_threshold", {}, "usreg(R) divergent, threshold_T31 = inf",
                        all_of({equals("/usreg_r/verdict", "divergent"),
                                equals("/threshold_t31", "inf")})),
                derived("calmness_inference", {{"beta", 1.0}, {"l", 10.0}},
                        "not exact, pcalm divergent, consistent",
                        all_of({is_false("/exact_at_l"), equals("/pcalm_direct/verdict", "divergent"),
                                is_true("/consistent")})),
                derived("calmness_inference", {{"l", 10.0}},
                        "mapping calm, not exact, pcalm finite, consistent",
                        all_of({equals("/mapping_calm/verdict", "finite"), is_false("/exact_at_l"),
                                equals("/pcalm_direct/verdict", "finite"),
                                is_true("/consistent")}))}});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

const std::vector<std::string>& operations_for(EntryKind kind) {
  static const std::vector<std::string> mapping{
      "fiber_distance",         "inverse_distance",   "hemiregularity",
      "uniform_hemiregularity", "uniform_lipschitz_lsc_inverse", "duality",
      "metric_regularity_witness", "convex_process_norm", "openness",
      "mapping_calmness"};
  static const std::vector<std::string> inclusion{
      "displacement",          "partial_strong_slope", "strict_outer_slope",
      "theorem41_certificate", "lsc_probe",            "solution_uniform_hemiregularity",
      "solution_openness"};
  static const std::vector<std::string> problem{
      "displacement", "parameterization_validity", "problem_calmness", "mapping_calmness",
      "penalty_value",
      "exactness", "exact_threshold", "calmness_inference"};
  switch (kind) {
    case EntryKind::Mapping: return mapping;
    case EntryKind::Inclusion: return inclusion;
    case EntryKind::Problem: return problem;
  }
  return mapping;
}

}  // namespace regmod
