#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regmod/serialize.hpp"

namespace regmod {

// Mapping fixtures.
SetValuedMap ex21_branch_parabola();  ///< Theta(p1,p2) = p1 + p2^2 (p1 >= 0), p1 - p2^2 (p1 < 0)
SetValuedMap ex22_hyperbola();        ///< Theta(p) = {x : x1 x2 = p}
SetValuedMap linear_onto();           ///< Lambda(p) = p1 + 2 p2
SetValuedMap identity_map();
SetValuedMap cubic_map();             ///< Theta(p) = {p^3}
SetValuedMap cone_pair_map();         ///< Theta(p) = {p, -p}
SetValuedMap halfline_map();          ///< Theta(p) = [p, inf)

/// dist(x, {y : y1 y2 = p}).
double hyperbola_distance(double p, const Point& x);

// Inclusion fixtures, all with omega = 0.
ParamInclusion affine_inclusion(double c);  ///< F(p,x) = {c p - x}
ParamInclusion cubic_inclusion();           ///< F(p,x) = {p^3 - x}
ParamInclusion quadratic_inclusion();       ///< F(p,x) = {(p - x)^2}
ParamInclusion shift_inclusion();           ///< F(p,x) = {max(p - x, 0)}, R(p) = [p, inf)
ParamInclusion sqrt_constraint(double beta);  ///< F(p,x) = {max(x - |p|^beta, 0)}
ParamInclusion step_up_inclusion();         ///< F(p,x) = {0} for p <= 0, {1} otherwise
ParamInclusion step_down_inclusion();       ///< F(p,x) = {1} for p <= 0, {0} otherwise

// Problem fixtures.
ParamProblem shift_halfline();            ///< min x over [p, inf)
ParamProblem ex31_sqrt_problem(double beta);  ///< min phi over (-inf, |p|^beta]

enum class EntryKind { Mapping, Inclusion, Problem };
enum class Provenance { Paper, Trivial, Derived };

std::string_view to_string(EntryKind k);
std::string_view to_string(Provenance p);

using Params = std::map<std::string, double>;
using Subject = std::variant<SetValuedMap, ParamInclusion, ParamProblem>;

struct Expectation {
  std::string operation;
  Params params;          ///< overrides under which the expectation applies
  std::string expected;   ///< human-readable statement
  Provenance provenance = Provenance::Derived;
  std::string citation;   ///< quoted source, set for Paper provenance
  std::function<bool(const Json& result)> check;
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Mapping;
  std::string formula_id;
  std::string summary;
  Params parameters;  ///< defaults
  std::function<Subject(const Params&)> build;
  std::vector<Expectation> expected;
};

const std::vector<CatalogEntry>& catalog();

/// Throws UnknownEntry.
const CatalogEntry& find_entry(std::string_view name);

const std::vector<std::string>& operations_for(EntryKind kind);

}  // namespace regmod
