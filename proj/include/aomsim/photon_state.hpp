#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "aomsim/mode.hpp"

namespace aomsim {

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-15;
inline constexpr double kNormTolerance = 1e-12;

// Sparse superposition over n-slot basis kets. Immutable after construction;
// every operation returns a new state.
class PhotonState {
 public:
  using Terms = std::map<BasisKet, Amplitude>;

  // Prunes |amp| <= kPruneThreshold. Throws empty_state if nothing survives
  // and dimension if any ket length differs from n_slots.
  static PhotonState from_terms(std::size_t n_slots, const Terms& terms);

  std::size_t n_slots() const { return n_slots_; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Zero for kets not in the support.
  Amplitude amplitude(const BasisKet& ket) const;

  double norm() const;
  bool normalized() const { return normalized_; }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  PhotonState(std::size_t n_slots, Terms terms);

  std::size_t n_slots_ = 0;
  Terms terms_;
  bool normalized_ = false;
};

// Merges duplicate kets by adding amplitudes.
PhotonState make_state(const std::vector<std::pair<BasisKet, Amplitude>>& kets_and_amplitudes);

PhotonState tensor(const PhotonState& a, const PhotonState& b);

// <a|b>, conjugate-linear in a.
Amplitude inner_product(const PhotonState& a, const PhotonState& b);

struct Normalized {
  PhotonState state;
  double original_norm;
};

Normalized normalize(const PhotonState& s);

// |<a|b>| >= 1 - tol
bool equal_up_to_global_phase(const PhotonState& a, const PhotonState& b, double tol);

// Identifies the photons in `slots` by the modes they occupy rather than by
// their source. Each ket's labels on those slots are sorted into canonical
// order and amplitudes of kets that differ only by a permutation are summed,
// then scaled by sqrt(prod n_m!) so that the result is Fock-normalized
// (a repeated label m with multiplicity n_m is a Fock state |n_m>).
PhotonState to_mode_occupation(const PhotonState& s, const std::vector<std::size_t>& slots);

}  // namespace aomsim
