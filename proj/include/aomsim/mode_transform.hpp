#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "aomsim/linalg.hpp"
#include "aomsim/mode.hpp"
#include "aomsim/photon_state.hpp"

namespace aomsim {

inline constexpr double kDefaultAuditTolerance = 1e-12;

// The two input and two output ports of one acousto-optic modulator. The
// high ports sit one frequency step above the low ports.
struct AOMPorts {
  ModeLabel in_low;
  ModeLabel in_high;
  ModeLabel out_low;
  ModeLabel out_high;

  // Throws invalid_params on frequency offsets other than +1 or repeated labels.
  void validate() const;
};

struct AOMParams {
  double theta = 0.0;  // pulse area |g beta| t / hbar
  double phi = 0.0;    // arg(g beta)
  AOMPorts ports;

  // hbar = 1.
  static AOMParams from_coupling(std::complex<double> g, std::complex<double> beta, double t, AOMPorts ports);
};

// Linear map from input modes to superpositions of output modes. Column j of
// the matrix is the image of inputs[j]; rows are indexed by outputs.
class ModeTransform {
 public:
  ModeTransform(std::vector<ModeLabel> inputs, std::vector<ModeLabel> outputs, CMatrix matrix);

  const std::vector<ModeLabel>& inputs() const { return inputs_; }
  const std::vector<ModeLabel>& outputs() const { return outputs_; }
  const CMatrix& matrix() const { return matrix_; }

  // Position of `label` among the inputs, if it is one.
  std::optional<std::size_t> input_index(const ModeLabel& label) const;

  // Image of inputs[j] as (output label, amplitude) pairs with nonzero amplitude.
  std::vector<std::pair<ModeLabel, Complex>> image(std::size_t j) const;

 private:
  std::vector<ModeLabel> inputs_;
  std::vector<ModeLabel> outputs_;
  CMatrix matrix_;
};

ModeTransform identity_transform(std::vector<ModeLabel> labels);

// in_low  -> cos(theta) out_low  - i e^{ i phi} sin(theta) out_high
// in_high -> cos(theta) out_high - i e^{-i phi} sin(theta) out_low
ModeTransform aom_evolution(const AOMParams& params);

// aom_evolution at theta = pi/4 with the in_high column multiplied by
// e^{i second_leg_phase}.
ModeTransform balanced_aom(double phi, double second_leg_phase, const AOMPorts& ports);

// The non-unitary map sending both inputs to (out_low + out_high)/sqrt(2).
ModeTransform flawed_aom(const AOMPorts& ports);

struct IsometryReport {
  double gram_deviation = 0.0;  // max |(M^dag M - I)_ij|
  bool is_isometry = false;
  bool is_unitary = false;
  Complex worst_pair_overlap{};  // largest off-diagonal of M^dag M
};

IsometryReport isometry_report(const ModeTransform& m, double tol = kDefaultAuditTolerance);

// Replaces every slot whose label is an input of `m` by its image and expands
// multilinearly. Slots holding other labels pass through; if such a label is
// one of m's outputs the call throws mode_collision.
PhotonState apply(const ModeTransform& m, const PhotonState& s);

// Applies `first`, then `second`; requires second.inputs() == first.outputs().
ModeTransform compose(const ModeTransform& first, const ModeTransform& second);

// max |a - e^{i alpha} b| over matrix entries, with alpha = arg tr(b^dag a).
// Infinity if the label lists differ.
double distance_up_to_phase(const ModeTransform& a, const ModeTransform& b);

}  // namespace aomsim
