#include "regmod/slopes.hpp"

#include <algorithm>
#include <cmath>

#include "regmod/error.hpp"
#include "regmod/parallel.hpp"

namespace regmod {

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Issued: return "issued";
    case CertificateStatus::HypothesisIIFails: return "hypothesis_ii_fails";
    case CertificateStatus::HypothesisIIIFails: return "hypothesis_iii_fails";
    case CertificateStatus::HypothesisIVFails: return "hypothesis_iv_fails";
    case CertificateStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kRegionSlack = 1e-9;

std::vector<Point> lattice_in(const GridSpec& grid, const Ball& ball, const Ball& region) {
  std::vector<Point> out;
  for (auto& q : grid.over(ball).generate()) {
    if (region.contains(q, kRegionSlack)) out.push_back(q);
  }
  return out;
}

bool within(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

int band_density(std::size_t dim) {
  switch (dim) {
    case 1: return 25;
    case 2: return 9;
    default: return 5;
  }
}

SlopeEstimate slope_at(const ParamInclusion& inc, const Point& p, const Point& x, double d0,
                       const RadiusLadder& ladder, const GridSpec& grid, const Tolerances& tol) {
  SlopeEstimate est{p, x, {}, 0.0, false, false};
  bool any_finite = false;
  for (double rho : ladder.radii()) {
    SlopeRung rung;
    rung.radius = rho;
    double best_q = -kInfinity;
    double best_dec = -kInfinity;
    for (const auto& q : lattice_in(grid, Ball(p, rho), inc.p_region)) {
      const double d = distance(q, p);
      if (d == 0.0) continue;
      const double dq = displacement_unchecked(inc, q, x);
      if (is_infinite(dq)) continue;
      any_finite = true;
      const double dec = d0 - dq;
      const double quot = dec / d;
      if (quot > best_q) {
        best_q = quot;
        rung.witness = q;
      }
      best_dec = std::max(best_dec, dec);
    }
    rung.quotient = std::max(0.0, best_q);
    rung.decrease = std::max(0.0, best_dec);
    est.per_rung.push_back(std::move(rung));
  }
  if (!any_finite) {
    throw Error(ErrorCode::UndefinedSlope, "every sampled displacement is infinite");
  }
  const auto& last = est.per_rung.back();
  est.is_local_min = last.decrease <= tol.eta_mem;
  if (est.is_local_min) {
    est.value = 0.0;
    est.stable = true;
  } else {
    est.value = last.quotient;
    const auto& prev = est.per_rung[est.per_rung.size() - 2];
    est.stable = within(last.quotient, prev.quotient, tol.tol_conv);
  }
  return est;
}

}  // namespace

SlopeEstimate partial_strong_slope(const ParamInclusion& inc, const Point& p, const Point& x,
                                   const RadiusLadder& ladder, const GridSpec& grid,
                                   const Tolerances& tol) {
  ladder.validate();
  const double d0 = displacement(inc, p, x);
  if (is_infinite(d0)) {
    throw Error(ErrorCode::UndefinedSlope, "displacement is infinite at the base point");
  }
  return slope_at(inc, p, x, d0, ladder, grid, tol);
}

OuterSlopeEstimate strict_outer_slope(const ParamInclusion& inc, const RadiusLadder& eps_ladder,
                                      const RadiusLadder& inner_ladder, const GridSpec& grid,
                                      const Tolerances& tol) {
  eps_ladder.validate();
  inner_ladder.validate();
  inc.validate();
  const GridSpec pgrid = grid.with_density(band_density(inc.ref_p.dim()));
  const GridSpec xgrid = grid.with_density(band_density(inc.ref_x.dim()));
  const GridSpec inner_grid = grid.with_density(std::min(grid.density, 16));

  struct Pair {
    Point p, x;
    double disp;
  };
  std::vector<Pair> pairs;
  const auto eps = eps_ladder.radii();
  for (double e : eps) {
    const auto ps = lattice_in(pgrid, Ball(inc.ref_p, e), inc.p_region);
    const auto xs = lattice_in(xgrid, Ball(inc.ref_x, e), inc.x_region);
    for (const auto& p : ps) {
      for (const auto& x : xs) {
        const double d = displacement_unchecked(inc, p, x);
        if (d > tol.eta_mem && d < e) pairs.push_back({p, x, d});
      }
    }
  }

  const auto slopes = parallel_map<std::optional<SlopeEstimate>>(
      pairs.size(), [&](std::size_t i) -> std::optional<SlopeEstimate> {
        const auto& pr = pairs[i];
        const auto ladder = inner_ladder.scaled_to(std::min(inner_ladder.r0, pr.disp));
        try {
          return slope_at(inc, pr.p, pr.x, pr.disp, ladder, inner_grid, tol);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::UndefinedSlope) return std::nullopt;
          throw;
        }
      });

  OuterSlopeEstimate out;
  for (double e : eps) {
    OuterSlopeBand band;
    band.epsilon = e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& pr = pairs[i];
      if (!slopes[i] || pr.disp >= e) continue;
      if (distance(pr.p, inc.ref_p) > e || distance(pr.x, inc.ref_x) > e) continue;
      ++band.samples;
      if (slopes[i]->value < band.infimum) {
        band.infimum = slopes[i]->value;
        band.argmin = slopes[i];
      }
    }
    if (band.samples == 0 && !out.band_empty_at) out.band_empty_at = e;
    out.per_epsilon.push_back(std::move(band));
  }
  if (out.per_epsilon.front().samples == 0) {
    throw Error(ErrorCode::EmptyBand, "no sampled pair has 0 < disp < epsilon at the largest epsilon");
  }
  std::vector<double> nonempty;
  for (const auto& b : out.per_epsilon) {
    if (b.samples > 0) nonempty.push_back(b.infimum);
  }
  out.value = nonempty.back();
  out.stable = out.value <= tol.tol_slope ||
               (nonempty.size() >= 2 && within(nonempty.back(), nonempty[nonempty.size() - 2],
                                               tol.tol_conv));
  return out;
}

std::vector<LscProbeReport> lsc_hypothesis_probes(const ParamInclusion& inc, const GridSpec& grid,
                                                  const Tolerances& tol) {
  const RadiusLadder probe_ladder{0.05, 0.5, 6};
  const GridSpec probe_grid = grid.with_density(9);
  const GridSpec three = grid.with_density(3);
  std::vector<LscProbeReport> probes;
  for (const auto& p : lattice_in(three, Ball(inc.ref_p, 0.1), inc.p_region)) {
    for (const auto& x : lattice_in(three, Ball(inc.ref_x, 0.1), inc.x_region)) {
      probes.push_back(lsc_probe(inc, x, p, probe_ladder, probe_grid, tol.tol_lsc));
    }
  }
  return probes;
}

bool lsc_hypothesis_holds(const std::vector<LscProbeReport>& probes) {
  return std::none_of(probes.begin(), probes.end(),
                      [](const LscProbeReport& r) { return r.violation.has_value(); });
}

CertificateReport theorem41_certificate(const ParamInclusion& inc,
                                        const CertificateLadders& ladders, const GridSpec& grid,
                                        const Tolerances& tol) {
  inc.validate();
  CertificateReport rep;

  rep.lsc_probes = lsc_hypothesis_probes(inc, grid, tol);
  const bool lsc_ok = lsc_hypothesis_holds(rep.lsc_probes);

  rep.ullsc_f = uniform_lipschitz_lsc_estimate(partial_map(inc), ladders.modulus, grid, tol);
  rep.outer_slope = strict_outer_slope(inc, ladders.eps, ladders.inner, grid, tol);
  rep.direct_usreg_r =
      uniform_hemiregularity_estimate(solution_map(inc, grid), ladders.modulus, grid, tol);

  if (!lsc_ok) {
    rep.status = CertificateStatus::HypothesisIIFails;
  } else if (rep.ullsc_f.verdict == Verdict::Divergent) {
    rep.status = CertificateStatus::HypothesisIIIFails;
  } else if (rep.outer_slope.value <= tol.tol_slope) {
    rep.status = CertificateStatus::HypothesisIVFails;
  } else if (rep.ullsc_f.verdict != Verdict::Finite || !rep.outer_slope.stable) {
    rep.status = CertificateStatus::Inconclusive;
  } else {
    rep.status = CertificateStatus::Issued;
    rep.bound = rep.ullsc_f.limiting_value / rep.outer_slope.value;
    rep.bound_respected = rep.direct_usreg_r.limiting_value <= rep.bound * (1.0 + tol.tol_cert);
  }
  return rep;
}

const CertificateReport& require_issued(const CertificateReport& rep) {
  switch (rep.status) {
    case CertificateStatus::Issued: return rep;
    case CertificateStatus::HypothesisIIFails:
      throw Error(ErrorCode::HypothesisIIFails, "displacement is not lower semicontinuous in p");
    case CertificateStatus::HypothesisIIIFails:
      throw Error(ErrorCode::HypothesisIIIFails, "F(p_ref, .) is not uniformly Lipschitz lsc");
    case CertificateStatus::HypothesisIVFails:
      throw Error(ErrorCode::HypothesisIVFails, "strict outer slope vanishes");
    case CertificateStatus::Inconclusive: break;
  }
  throw Error(ErrorCode::InvalidArgument, "certificate is inconclusive");
}

}  // namespace regmod
