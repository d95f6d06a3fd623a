#pragma once

#include <complex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aomsim/entanglement.hpp"
#include "aomsim/mode_transform.hpp"
#include "aomsim/photon_state.hpp"

namespace aomsim {

enum class TransformKind { correct, flawed };

std::string_view to_string(TransformKind kind);
std::optional<TransformKind> parse_transform_kind(std::string_view text);

// Photons 1..4 live in slots 0..3. Photons 2 and 3 are the ones sent through
// the modulators.
inline const SlotSet kPhotons14{0, 3};
inline const SlotSet kModulatedSlots{1, 2};

// The two-source, two-modulator swapping arrangement.
struct SchemeWiring {
  PhotonState source1;  // photons 1, 2
  PhotonState source2;  // photons 3, 4
  ModeTransform aom1;   // |ω+δ⟩_2, |ω⟩_3   -> T1', T1
  ModeTransform aom2;   // |ω+δ⟩_3', |ω⟩_2' -> T2, T2'
};

struct SourceStates {
  PhotonState phi;  // (|ω⟩_1|ω+δ⟩_2 + |ω+δ⟩_1'|ω⟩_2') / sqrt2
  PhotonState psi;  // (|ω⟩_3|ω+δ⟩_4 + |ω+δ⟩_3'|ω⟩_4') / sqrt2
};

SourceStates build_source_states();

AOMPorts aom1_ports();
AOMPorts aom2_ports();

// The correct kind uses balanced_aom(phi_k, pi/2); at zero phases it is
// exactly the textbook four-line map with +i on |ω+δ⟩_2 and -i on |ω⟩_3.
SchemeWiring build_scheme_transforms(TransformKind kind, double phi1, double phi2);

// A set of spatial tokens treated as one detection region.
using Region = std::set<std::string>;

Region output_region(const ModeTransform& aom);

struct PostSelection {
  PhotonState state;  // renormalized
  double probability;
};

// Keeps the kets with exactly one photon in each region. The input must be
// normalized. Throws empty_selection when no ket survives.
PostSelection post_select(const PhotonState& s, const std::vector<Region>& regions);

// Splits `post_selected` by its sub-kets on `components` (which must yield
// exactly two), normalizes the two conditional states on the remaining
// slots, and returns <first|second>. The bra is the lexicographically larger
// component, e.g. |ω+δ⟩_1'|ω+δ⟩_4 ahead of |ω⟩_1|ω⟩_4'.
Complex aom_factor_overlap(const PhotonState& post_selected, const SlotSet& components = kPhotons14);

struct SwapReport {
  TransformKind transform_kind = TransformKind::correct;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double norm_after_aoms = 0.0;
  double postselect_probability = 0.0;
  Complex factor_overlap{};
  double rho14_negativity = 0.0;
  std::vector<double> rho14_eigenvalues;
  double nosignal_trace_distance = 0.0;
  bool swapping_verdict = false;

  // Kept for reporting.
  PhotonState post_selected;
  DensityMatrix rho14;
};

inline constexpr double kSwapVerdictThreshold = 1e-6;

// Four-photon state after both modulators, in slot form (16 kets for the
// correct kind).
PhotonState evolve_scheme(const SchemeWiring& wiring);

// Modulated photons re-identified by output mode, then renormalized if the
// norm drifted past kNormTolerance. The norm before renormalization is
// returned alongside.
Normalized detected_state(const SchemeWiring& wiring);

SwapReport run_swap(TransformKind kind, double phi1 = 0.0, double phi2 = 0.0);

// Trace distance of rho_14 before and after the modulators, without
// post-selection.
double no_signaling_check(const SchemeWiring& wiring);
double no_signaling_check(TransformKind kind, double phi1 = 0.0, double phi2 = 0.0);

}  // namespace aomsim
