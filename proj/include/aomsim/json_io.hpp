#pragma once

#include <string>

#include <json.hpp>

#include "aomsim/entanglement.hpp"
#include "aomsim/mode_transform.hpp"
#include "aomsim/photon_state.hpp"
#include "aomsim/scenarios.hpp"

namespace aomsim {

using json = nlohmann::json;

// Reals written by the serializers are rounded to this many decimals so that
// identical inputs give byte-identical documents.
inline constexpr int kReportDecimals = 12;

double round_fixed(double x);

// {"n_slots": n, "terms": [{"ket": [["1", 0], ...], "amp": [re, im]}, ...]}
json state_to_json(const PhotonState& s);
PhotonState state_from_json(const json& j);

// {"inputs": [...], "outputs": [...], "matrix": [[[re, im], ...], ...]}, rows = outputs
json transform_to_json(const ModeTransform& m);
ModeTransform transform_from_json(const json& j);

// {"kept_slots": [...], "basis": [ket, ...], "matrix": [[[re, im], ...], ...]}
json density_to_json(const DensityMatrix& rho);

json isometry_to_json(const IsometryReport& r);

struct Tolerances {
  double audit = kDefaultAuditTolerance;
  double swap_verdict = kSwapVerdictThreshold;
};

json swap_report_to_json(const SwapReport& r, const Tolerances& tol);

// Parses text, mapping syntax errors to ErrorKind::parse.
json parse_json(const std::string& text, const std::string& what);

}  // namespace aomsim
