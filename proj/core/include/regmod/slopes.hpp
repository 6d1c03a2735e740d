#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "regmod/inclusion.hpp"
#include "regmod/moduli.hpp"

namespace regmod {

struct SlopeRung {
  double radius = 0.0;
  double quotient = 0.0;  ///< max of (disp(p,x) - disp(q,x)) / d(q,p), clamped at 0
  double decrease = 0.0;  ///< largest sampled drop disp(p,x) - disp(q,x)
  std::optional<Point> witness;
};

/// Strong slope of p -> disp(p, x) at p.
struct SlopeEstimate {
  Point p;
  Point x;
  std::vector<SlopeRung> per_rung;
  double value = 0.0;
  bool is_local_min = false;
  bool stable = false;  ///< last two rung quotients within tol_conv
};

struct OuterSlopeBand {
  double epsilon = 0.0;
  double infimum = kInfinity;  ///< kInfinity while the band is empty
  std::size_t samples = 0;
  std::optional<SlopeEstimate> argmin;
};

struct OuterSlopeEstimate {
  std::vector<OuterSlopeBand> per_epsilon;
  double value = 0.0;
  std::optional<double> band_empty_at;
  bool stable = false;  ///< last two nonempty bands within tol_conv, or value at most tol_slope
};

/// Partial strong slope in p of the displacement, sampled on ball(p, rho_k)
/// for the ladder radii. A point with no sampled decrease above eta_mem on
/// the smallest rung is reported as a local minimizer with slope 0.
SlopeEstimate partial_strong_slope(const ParamInclusion& inc, const Point& p, const Point& x,
                                   const RadiusLadder& ladder, const GridSpec& grid,
                                   const Tolerances& tol = {});

/// Strict outer slope at the reference pair: per epsilon, the infimum of the
/// partial strong slope over sampled pairs with eta_mem < disp < epsilon in
/// ball(p_ref, epsilon) x ball(x_ref, epsilon). The inner ladder is scaled
/// down to the displacement of each sampled pair.
OuterSlopeEstimate strict_outer_slope(const ParamInclusion& inc, const RadiusLadder& eps_ladder,
                                      const RadiusLadder& inner_ladder, const GridSpec& grid,
                                      const Tolerances& tol = {});

/// Runs lsc_probe on a small lattice of pairs around the reference pair.
/// Returns the probes; the hypothesis holds when none reports a violation.
std::vector<LscProbeReport> lsc_hypothesis_probes(const ParamInclusion& inc, const GridSpec& grid,
                                                  const Tolerances& tol = {});

bool lsc_hypothesis_holds(const std::vector<LscProbeReport>& probes);

enum class CertificateStatus {
  Issued,
  HypothesisIIFails,
  HypothesisIIIFails,
  HypothesisIVFails,
  Inconclusive,
};

std::string_view to_string(CertificateStatus s);

struct CertificateReport {
  CertificateStatus status = CertificateStatus::Inconclusive;
  std::vector<LscProbeReport> lsc_probes;
  ModulusEstimate ullsc_f;
  OuterSlopeEstimate outer_slope;
  double bound = kInfinity;
  ModulusEstimate direct_usreg_r;
  bool bound_respected = false;
};

struct CertificateLadders {
  RadiusLadder modulus;
  RadiusLadder eps;
  RadiusLadder inner;
};

/// usreg(R) <= uLlsc(F(p_ref, .)) / strict outer slope, with each hypothesis
/// checked on samples. The direct estimate of usreg(R) is always computed.
CertificateReport theorem41_certificate(const ParamInclusion& inc,
                                        const CertificateLadders& ladders,
                                        const GridSpec& grid, const Tolerances& tol = {});

/// Returns the report when issued; otherwise throws the matching Hypothesis*
/// error (InvalidArgument when inconclusive).
const CertificateReport& require_issued(const CertificateReport& rep);

}  // namespace regmod
