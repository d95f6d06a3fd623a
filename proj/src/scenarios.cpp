#include "aomsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "aomsim/errors.hpp"

namespace aomsim {

namespace {

const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

BasisKet ket(std::initializer_list<ModeLabel> labels) { return BasisKet{std::vector<ModeLabel>(labels)}; }

}  // namespace

std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::correct ? "correct" : "flawed";
}

std::optional<TransformKind> parse_transform_kind(std::string_view text) {
  if (text == "correct") return TransformKind::correct;
  if (text == "flawed") return TransformKind::flawed;
  return std::nullopt;
}

SourceStates build_source_states() {
  return {
      make_state({{ket({{"1", 0}, {"2", 1}}), kInvSqrt2}, {ket({{"1'", 1}, {"2'", 0}}), kInvSqrt2}}),
      make_state({{ket({{"3", 0}, {"4", 1}}), kInvSqrt2}, {ket({{"3'", 1}, {"4'", 0}}), kInvSqrt2}}),
  };
}

AOMPorts aom1_ports() { return {{"3", 0}, {"2", 1}, {"T1'", 0}, {"T1", 1}}; }

AOMPorts aom2_ports() { return {{"2'", 0}, {"3'", 1}, {"T2", 0}, {"T2'", 1}}; }

SchemeWiring build_scheme_transforms(TransformKind kind, double phi1, double phi2) {
  auto [phi, psi] = build_source_states();
  if (kind == TransformKind::flawed) {
    return {std::move(phi), std::move(psi), flawed_aom(aom1_ports()), flawed_aom(aom2_ports())};
  }
  const double quarter_turn = std::numbers::pi / 2.0;
  return {std::move(phi), std::move(psi), balanced_aom(phi1, quarter_turn, aom1_ports()),
          balanced_aom(phi2, quarter_turn, aom2_ports())};
}

Region output_region(const ModeTransform& aom) {
  Region r;
  for (const auto& label : aom.outputs()) r.insert(label.spatial);
  return r;
}

PostSelection post_select(const PhotonState& s, const std::vector<Region>& regions) {
  if (!s.normalized()) {
    throw Error(ErrorKind::unnormalized, "post_select: input state norm is " + std::to_string(s.norm()));
  }
  PhotonState::Terms kept;
  for (const auto& [k, amp] : s) {
    bool keep = true;
    for (const auto& region : regions) {
      std::size_t hits = 0;
      for (const auto& label : k.slots) hits += region.contains(label.spatial) ? 1 : 0;
      keep = keep && hits == 1;
    }
    if (keep) kept.emplace(k, amp);
  }
  if (kept.empty()) throw Error(ErrorKind::empty_selection, "post_select: no ket satisfies the occupancy rule");
  auto selected = PhotonState::from_terms(s.n_slots(), kept);
  auto [state, norm] = normalize(selected);
  return {std::move(state), norm * norm};
}

Complex aom_factor_overlap(const PhotonState& post_selected, const SlotSet& components) {
  SlotSet comp = components;
  std::sort(comp.begin(), comp.end());
  SlotSet rest;
  for (std::size_t i = 0; i < post_selected.n_slots(); ++i) {
    if (!std::binary_search(comp.begin(), comp.end(), i)) rest.push_back(i);
  }
  if (comp.empty() || rest.empty() || comp.back() >= post_selected.n_slots()) {
    throw Error(ErrorKind::bipartition, "aom_factor_overlap: components must be a nonempty proper slot subset");
  }

  std::map<BasisKet, PhotonState::Terms> conditional;
  for (const auto& [k, amp] : post_selected) conditional[restrict(k, comp)][restrict(k, rest)] += amp;
  if (conditional.size() != 2) {
    throw Error(ErrorKind::structure, "aom_factor_overlap: expected 2 components, found " +
                                          std::to_string(conditional.size()));
  }
  const PhotonState bra = normalize(PhotonState::from_terms(rest.size(), conditional.rbegin()->second)).state;
  const PhotonState ket = normalize(PhotonState::from_terms(rest.size(), conditional.begin()->second)).state;
  return inner_product(bra, ket);
}

PhotonState evolve_scheme(const SchemeWiring& wiring) {
  return apply(wiring.aom2, apply(wiring.aom1, tensor(wiring.source1, wiring.source2)));
}

Normalized detected_state(const SchemeWiring& wiring) {
  PhotonState occupation = to_mode_occupation(evolve_scheme(wiring), kModulatedSlots);
  if (occupation.normalized()) {
    const double norm = occupation.norm();
    return {std::move(occupation), norm};
  }
  return normalize(occupation);
}

double no_signaling_check(const SchemeWiring& wiring) {
  const DensityMatrix before = partial_trace(tensor(wiring.source1, wiring.source2), kPhotons14);
  const DensityMatrix after = partial_trace(detected_state(wiring).state, kPhotons14);
  return trace_distance(before, after);
}

double no_signaling_check(TransformKind kind, double phi1, double phi2) {
  return no_signaling_check(build_scheme_transforms(kind, phi1, phi2));
}

SwapReport run_swap(TransformKind kind, double phi1, double phi2) {
  const SchemeWiring wiring = build_scheme_transforms(kind, phi1, phi2);
  auto [detected, norm_after] = detected_state(wiring);
  auto selection = post_select(detected, {output_region(wiring.aom1), output_region(wiring.aom2)});

  DensityMatrix rho14 = partial_trace(selection.state, kPhotons14);
  const double neg = negativity(rho14, {kPhotons14.back()});

  SwapReport report{
      .transform_kind = kind,
      .phi1 = phi1,
      .phi2 = phi2,
      .norm_after_aoms = norm_after,
      .postselect_probability = selection.probability,
      .factor_overlap = aom_factor_overlap(selection.state),
      .rho14_negativity = neg,
      .rho14_eigenvalues = hermitian_eigenvalues(rho14.matrix),
      .nosignal_trace_distance = no_signaling_check(wiring),
      .swapping_verdict = neg > kSwapVerdictThreshold,
      .post_selected = selection.state,
      .rho14 = std::move(rho14),
  };
  return report;
}

}  // namespace aomsim
