#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "aomsim/errors.hpp"
#include "aomsim/scenarios.hpp"
#include "dense_oracle.hpp"
#include "test_helpers.hpp"

using namespace aomsim;
using testing::ket;

namespace {

const double kH = std::numbers::sqrt2 / 2.0;
const Complex kI{0.0, 1.0};

// Second-quantized brute force (tests/oracles/derive_constants.py) for the
// flawed map; exact values sqrt(3/2), 1/3 and 1/4.
const double kFlawedNormAfterAoms = 1.224744871391589;
const double kFlawedPostselectProbability = 0.333333333333333;
const double kFlawedNoSignalDistance = 0.25;

PhotonState single(const char* spatial, int k) { return make_state({{ket({{spatial, k}}), 1.0}}); }

bool one_in_each_region(const BasisKet& k) {
  int r1 = 0;
  int r2 = 0;
  for (const auto& l : k.slots) {
    r1 += oracle::in_region(l, 1) ? 1 : 0;
    r2 += oracle::in_region(l, 2) ? 1 : 0;
  }
  return r1 == 1 && r2 == 1;
}

}  // namespace

TEST_CASE("build_source_states") {
  auto [phi, psi] = build_source_states();
  CHECK(phi.normalized());
  CHECK(psi.normalized());
  CHECK(std::abs(inner_product(phi, phi) - 1.0) < 1e-15);
  auto sp = schmidt(phi, {0});
  REQUIRE(sp.values.size() == 2);
  CHECK(std::abs(sp.values[0] - kH) < 1e-12);
  CHECK(std::abs(sp.values[1] - kH) < 1e-12);
  CHECK(std::abs(entropy(sp) - 1.0) < 1e-12);
  CHECK(std::abs(psi.amplitude(ket({{"3'", 1}, {"4'", 0}})) - kH) < 1e-15);
}

TEST_CASE("build_scheme_transforms: correct wiring reproduces the four-line table") {
  auto w = build_scheme_transforms(TransformKind::correct, 0.0, 0.0);
  auto check_image = [](const PhotonState& img, const char* low, const char* high, Complex high_amp) {
    CHECK(std::abs(img.amplitude(ket({{low, 0}})) - kH) < 1e-15);
    CHECK(std::abs(img.amplitude(ket({{high, 1}})) - high_amp * kH) < 1e-15);
  };
  check_image(apply(w.aom1, single("2", 1)), "T1'", "T1", kI);
  check_image(apply(w.aom1, single("3", 0)), "T1'", "T1", -kI);
  check_image(apply(w.aom2, single("3'", 1)), "T2", "T2'", kI);
  check_image(apply(w.aom2, single("2'", 0)), "T2", "T2'", -kI);
  CHECK(isometry_report(w.aom1).is_unitary);
  CHECK(isometry_report(w.aom2).is_unitary);
}

TEST_CASE("build_scheme_transforms: flawed wiring has identical images") {
  auto w = build_scheme_transforms(TransformKind::flawed, 0.0, 0.0);
  CHECK(apply(w.aom1, single("2", 1)).terms() == apply(w.aom1, single("3", 0)).terms());
  CHECK(apply(w.aom2, single("3'", 1)).terms() == apply(w.aom2, single("2'", 0)).terms());
  CHECK_FALSE(isometry_report(w.aom1).is_isometry);
}

TEST_CASE("evolve_scheme: 16-ket expansion matches the dense oracle") {
  for (bool flawed : {false, true}) {
    auto w = build_scheme_transforms(flawed ? TransformKind::flawed : TransformKind::correct, 0.0, 0.0);
    auto s = evolve_scheme(w);
    auto dense = oracle::evolved(flawed);
    CHECK(s.size() == dense.support());
    for (std::size_t i = 0; i < dense.amp.size(); ++i) {
      CHECK(std::abs(s.amplitude(dense.ket(i)) - dense.amp[i]) < 1e-15);
    }
  }
  auto s = evolve_scheme(build_scheme_transforms(TransformKind::correct, 0.0, 0.0));
  CHECK(s.size() == 16);
  for (const auto& [k, a] : s) CHECK(std::abs(std::abs(a) - 0.25) < 1e-15);
  CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
}

TEST_CASE("post_select keeps one photon per modulator, probability 1/2") {
  auto s = evolve_scheme(build_scheme_transforms(TransformKind::correct, 0.0, 0.0));
  auto dense = oracle::evolved(false);
  double oracle_probability = 0;
  for (std::size_t i = 0; i < dense.amp.size(); ++i) {
    if (one_in_each_region(dense.ket(i))) oracle_probability += std::norm(dense.amp[i]);
  }
  CHECK(std::abs(oracle_probability - 0.5) < 1e-15);

  const std::vector<Region> regions{{"T1", "T1'"}, {"T2", "T2'"}};
  auto sel = post_select(s, regions);
  CHECK(sel.state.size() == 8);
  CHECK(std::abs(sel.probability - oracle_probability) <= 1e-12);

  // discarded kets are exactly those with both modulated photons behind one device
  for (const auto& [k, a] : s) {
    const bool kept = sel.state.amplitude(k) != Complex{};
    const bool same_device = (oracle::in_region(k[1], 1) && oracle::in_region(k[2], 1)) ||
                             (oracle::in_region(k[1], 2) && oracle::in_region(k[2], 2));
    CHECK(kept == !same_device);
  }

  // the two surviving terms carry norm 1/sqrt2 before renormalizing
  PhotonState::Terms kept;
  for (const auto& [k, a] : s) {
    if (one_in_each_region(k)) kept.emplace(k, a);
  }
  CHECK(std::abs(normalize(PhotonState::from_terms(4, kept)).original_norm - kH) < 1e-15);

  try {
    post_select(s, {{"nowhere"}});
    FAIL("expected empty selection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_selection);
  }
}

TEST_CASE("run_swap: correct transform gives no swapping") {
  auto r = run_swap(TransformKind::correct);
  CHECK(std::abs(r.norm_after_aoms - 1.0) <= 1e-12);
  CHECK(std::abs(r.postselect_probability - 0.5) <= 1e-12);
  CHECK(std::abs(r.factor_overlap) <= 1e-12);
  CHECK(std::abs(r.rho14_negativity) <= 1e-12);
  CHECK(r.nosignal_trace_distance <= 1e-12);
  CHECK_FALSE(r.swapping_verdict);

  // rho_14: equal mixture of |ω⟩_1|ω⟩_4' and |ω+δ⟩_1'|ω+δ⟩_4, no coherence
  REQUIRE(r.rho14.basis.size() == 2);
  CHECK(r.rho14.basis[0] == ket({{"1", 0}, {"4'", 0}}));
  CHECK(r.rho14.basis[1] == ket({{"1'", 1}, {"4", 1}}));
  CHECK(std::abs(r.rho14.matrix(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(r.rho14.matrix(1, 1) - 0.5) < 1e-12);
  CHECK(std::abs(r.rho14.matrix(0, 1)) < 1e-12);
  REQUIRE(r.rho14_eigenvalues.size() == 2);
  CHECK(std::abs(r.rho14_eigenvalues[0] - 0.5) < 1e-12);

  auto sp = schmidt(r.post_selected, kPhotons14);
  REQUIRE(sp.values.size() == 2);
  CHECK(std::abs(sp.values[0] - kH) < 1e-12);
  CHECK(std::abs(sp.values[1] - kH) < 1e-12);

  auto pt = hermitian_eigenvalues(partial_transpose(r.rho14, {3}));
  for (double e : pt) CHECK(e >= -1e-12);
}

TEST_CASE("run_swap: flawed transform reproduces a spurious Bell pair") {
  auto r = run_swap(TransformKind::flawed);
  CHECK(std::abs(r.norm_after_aoms - kFlawedNormAfterAoms) < 1e-12);
  CHECK(std::abs(r.norm_after_aoms - std::sqrt(1.5)) < 1e-12);
  CHECK(std::abs(r.postselect_probability - kFlawedPostselectProbability) < 1e-12);
  CHECK(std::abs(r.factor_overlap - 1.0) <= 1e-12);
  CHECK(std::abs(r.rho14_negativity - 0.5) <= 1e-12);
  CHECK(std::abs(r.nosignal_trace_distance - kFlawedNoSignalDistance) < 1e-12);
  CHECK(r.swapping_verdict);
}

TEST_CASE("detected_state: correct modulators keep the norm, flawed do not") {
  auto correct = detected_state(build_scheme_transforms(TransformKind::correct, 0.0, 0.0));
  CHECK(std::abs(correct.original_norm - 1.0) <= 1e-12);
  // bunching cancels the mixed-mode terms when both photons share a device
  CHECK(correct.state.size() == 12);
  auto flawed = detected_state(build_scheme_transforms(TransformKind::flawed, 0.0, 0.0));
  CHECK(std::abs(flawed.original_norm - 1.0) > 0.1);
}

TEST_CASE("property: verdicts are independent of the modulator phases") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const auto base = run_swap(TransformKind::correct);
  for (int t = 0; t < 50; ++t) {
    const double p1 = angle(rng);
    const double p2 = angle(rng);
    auto r = run_swap(TransformKind::correct, p1, p2);
    CHECK_FALSE(r.swapping_verdict);
    CHECK(std::abs(r.rho14_negativity - base.rho14_negativity) <= 1e-10);
    CHECK(std::abs(r.factor_overlap) <= 1e-12);
    CHECK(std::abs(r.postselect_probability - 0.5) <= 1e-12);
    CHECK(std::abs(r.norm_after_aoms - 1.0) <= 1e-12);
    CHECK(no_signaling_check(TransformKind::correct, p1, p2) <= 1e-12);
  }
}

TEST_CASE("aom_factor_overlap: structure errors") {
  auto one_component = make_state({{ket({{"1", 0}, {"T1", 1}, {"T2", 0}, {"4'", 0}}), 1.0}});
  try {
    aom_factor_overlap(one_component);
    FAIL("expected structure error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::structure);
  }
}

TEST_CASE("no_signaling_check: identity devices change nothing") {
  auto w = build_scheme_transforms(TransformKind::correct, 0.0, 0.0);
  w.aom1 = identity_transform(w.aom1.inputs());
  w.aom2 = identity_transform(w.aom2.inputs());
  CHECK(no_signaling_check(w) == 0.0);
  CHECK(no_signaling_check(TransformKind::flawed) > 1e-3);
}

TEST_CASE("transform kind names") {
  CHECK(parse_transform_kind("correct") == TransformKind::correct);
  CHECK(parse_transform_kind("flawed") == TransformKind::flawed);
  CHECK_FALSE(parse_transform_kind("unitary").has_value());
  CHECK(to_string(TransformKind::flawed) == "flawed");
}
