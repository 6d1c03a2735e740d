#include "regmod/serialize.hpp"

#include <cmath>
#include <sstream>

#include "regmod/error.hpp"

namespace regmod {

Json number(double v) {
  if (v == kInfinity) return "inf";
  if (v == -kInfinity) return "-inf";
  return v;
}

double number_from(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
    throw Error(ErrorCode::InvalidArgument, "not a number: " + s);
  }
  return j.get<double>();
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? as_json(*v) : Json(nullptr);
}

Json points(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(as_json(p));
  return a;
}

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

Json as_json(const Point& p) {
  Json a = Json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

Json as_json(const RadiusLadder& l) {
  return {{"r0", l.r0}, {"factor", l.factor}, {"rungs", l.rungs}};
}

Json as_json(const GridSpec& g) {
  return {{"density", g.density},
          {"scheme", g.scheme == SamplingScheme::UniformLattice ? "lattice" : "halton"},
          {"seed", g.seed}};
}

Json as_json(const Tolerances& t) {
  return {{"eta_mem", t.eta_mem},   {"tol_conv", t.tol_conv}, {"cap_value", t.cap_value},
          {"tol_cert", t.tol_cert}, {"tol_lsc", t.tol_lsc},   {"tol_slope", t.tol_slope}};
}

Json as_json(const ModulusEstimate& e) {
  Json rungs = Json::array();
  for (const auto& r : e.per_rung) {
    rungs.push_back({{"radius", r.radius},
                     {"supremum_value", number(r.supremum_value)},
                     {"scale_value", number(r.scale_value)},
                     {"samples", r.samples},
                     {"witness", points(r.witness)}});
  }
  return {{"quantity", e.quantity},
          {"limiting_value", number(e.limiting_value)},
          {"verdict", std::string(to_string(e.verdict))},
          {"boundary_contaminated", e.boundary_contaminated},
          {"per_rung", rungs}};
}

Json as_json(const RegularityWitness& w) {
  return {{"p", as_json(w.p)},
          {"x", as_json(w.x)},
          {"inverse_dist", number(w.inverse_dist)},
          {"kappa_fiber_dist", number(w.kappa_fiber_dist)},
          {"radius", w.radius}};
}

Json as_json(const ConvexProcessNorm& n) {
  return {{"value", number(n.value)}, {"witness", as_json(n.witness)}};
}

Json as_json(const OpennessReport& r) {
  return {{"holds", r.holds},
          {"violating_x", optional_json(r.violating_x)},
          {"violating_r", r.violating_r},
          {"radii", numbers(r.radii)},
          {"checked", r.checked}};
}

Json as_json(const LscProbeReport& r) {
  return {{"radii", numbers(r.radii)},
          {"min_over_ball", numbers(r.min_over_ball)},
          {"value_at_center", number(r.value_at_center)},
          {"violation", optional_json(r.violation)}};
}

Json as_json(const SlopeEstimate& s) {
  Json rungs = Json::array();
  for (const auto& r : s.per_rung) {
    rungs.push_back({{"radius", r.radius},
                     {"quotient", r.quotient},
                     {"decrease", r.decrease},
                     {"witness", optional_json(r.witness)}});
  }
  return {{"p", as_json(s.p)},           {"x", as_json(s.x)},
          {"value", s.value},            {"is_local_min", s.is_local_min},
          {"stable", s.stable},          {"per_rung", rungs}};
}

Json as_json(const OuterSlopeEstimate& s) {
  Json bands = Json::array();
  for (const auto& b : s.per_epsilon) {
    Json arg = nullptr;
    if (b.argmin) arg = {{"p", as_json(b.argmin->p)}, {"x", as_json(b.argmin->x)}};
    bands.push_back({{"epsilon", b.epsilon},
                     {"infimum", number(b.infimum)},
                     {"samples", b.samples},
                     {"argmin", arg}});
  }
  return {{"value", s.value},
          {"stable", s.stable},
          {"band_empty_at", s.band_empty_at ? Json(*s.band_empty_at) : Json(nullptr)},
          {"per_epsilon", bands}};
}

Json as_json(const CertificateReport& r) {
  std::size_t violations = 0;
  for (const auto& p : r.lsc_probes) violations += p.violation ? 1 : 0;
  return {{"status", std::string(to_string(r.status))},
          {"lsc_probes", r.lsc_probes.size()},
          {"lsc_violations", violations},
          {"ullsc_f", as_json(r.ullsc_f)},
          {"outer_slope", as_json(r.outer_slope)},
          {"bound", number(r.bound)},
          {"direct_usreg_r", as_json(r.direct_usreg_r)},
          {"bound_respected", r.bound_respected}};
}

Json as_json(const ParameterizationReport& r) {
  Json w = Json::array();
  for (const auto& p : r.witnesses) w.push_back(optional_json(p));
  return {{"condition_i", r.condition_i},
          {"condition_ii", r.condition_ii},
          {"taus", numbers(r.taus)},
          {"witnesses", w}};
}

Json as_json(const PenaltyVerdict& v) {
  return {{"level", v.level},
          {"form", std::string(to_string(v.form))},
          {"exact", v.exact},
          {"witness", optional_json(v.witness)},
          {"witness_value", number(v.witness_value)},
          {"base_value", number(v.base_value)},
          {"check_radius", v.check_radius}};
}

Json as_json(const ThresholdReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.verified_levels) {
    levels.push_back(
        {{"level", l.level}, {"form", std::string(to_string(l.form))}, {"exact", l.exact}});
  }
  return {{"usreg_r", as_json(r.usreg_r)},
          {"pcalm", as_json(r.pcalm)},
          {"threshold_t31", number(r.threshold_t31)},
          {"ullsc_f", as_json(r.ullsc_f)},
          {"outer_slope", optional_json(r.outer_slope)},
          {"lsc_clean", r.lsc_clean},
          {"threshold_c41", number(r.threshold_c41)},
          {"check_radius", r.check_radius},
          {"minimal_exact_geometric", number(r.minimal_exact_geometric)},
          {"minimal_exact_data", number(r.minimal_exact_data)},
          {"verified_levels", levels}};
}

Json as_json(const CalmnessInferenceReport& r) {
  return {{"mapping_calm", as_json(r.mapping_calm)},
          {"exact_at_l", r.exact_at_l},
          {"pcalm_direct", as_json(r.pcalm_direct)},
          {"consistent", r.consistent}};
}

std::string rungs_csv(const ModulusEstimate& e) {
  std::ostringstream os;
  os.precision(17);
  os << "radius,supremum_value,scale_value\n";
  for (const auto& r : e.per_rung) {
    os << r.radius << ',' << r.supremum_value << ',' << r.scale_value << '\n';
  }
  return os.str();
}

}  // namespace regmod
