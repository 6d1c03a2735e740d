#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "regmod/penalty.hpp"

namespace regmod {

using Json = nlohmann::ordered_json;

/// Finite values as numbers; infinities as the strings "inf" and "-inf".
Json number(double v);
double number_from(const Json& j);

Json as_json(const Point& p);
Json as_json(const RadiusLadder& l);
Json as_json(const GridSpec& g);
Json as_json(const Tolerances& t);
Json as_json(const ModulusEstimate& e);
Json as_json(const RegularityWitness& w);
Json as_json(const ConvexProcessNorm& n);
Json as_json(const OpennessReport& r);
Json as_json(const LscProbeReport& r);
Json as_json(const SlopeEstimate& s);
Json as_json(const OuterSlopeEstimate& s);
Json as_json(const CertificateReport& r);
Json as_json(const ParameterizationReport& r);
Json as_json(const PenaltyVerdict& v);
Json as_json(const ThresholdReport& r);
Json as_json(const CalmnessInferenceReport& r);

/// radius,supremum_value,scale_value rows with a header line.
std::string rungs_csv(const ModulusEstimate& e);

}  // namespace regmod
