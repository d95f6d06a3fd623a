#include "aomsim/photon_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aomsim/errors.hpp"

namespace aomsim {

PhotonState::PhotonState(std::size_t n_slots, Terms terms) : n_slots_(n_slots), terms_(std::move(terms)) {
  normalized_ = std::abs(norm() - 1.0) <= kNormTolerance;
}

PhotonState PhotonState::from_terms(std::size_t n_slots, const Terms& terms) {
  if (n_slots == 0) throw Error(ErrorKind::dimension, "state: kets need at least one slot");
  Terms kept;
  for (const auto& [ket, amp] : terms) {
    if (ket.size() != n_slots) {
      throw Error(ErrorKind::dimension, "state: ket of length " + std::to_string(ket.size()) +
                                            " in a " + std::to_string(n_slots) + "-slot state");
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw Error(ErrorKind::parse, "state: non-finite amplitude for " + ket_notation(ket));
    }
    if (std::abs(amp) > kPruneThreshold) kept.emplace(ket, amp);
  }
  if (kept.empty()) throw Error(ErrorKind::empty_state, "state: all amplitudes vanish");
  return PhotonState(n_slots, std::move(kept));
}

Amplitude PhotonState::amplitude(const BasisKet& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? Amplitude{} : it->second;
}

double PhotonState::norm() const {
  double sum = 0.0;
  for (const auto& [ket, amp] : terms_) sum += std::norm(amp);
  return std::sqrt(sum);
}

PhotonState make_state(const std::vector<std::pair<BasisKet, Amplitude>>& kets_and_amplitudes) {
  if (kets_and_amplitudes.empty()) throw Error(ErrorKind::empty_state, "make_state: no kets given");
  const std::size_t n = kets_and_amplitudes.front().first.size();
  PhotonState::Terms terms;
  for (const auto& [ket, amp] : kets_and_amplitudes) {
    if (ket.size() != n) {
      throw Error(ErrorKind::dimension, "make_state: mixed ket lengths " + std::to_string(n) + " and " +
                                            std::to_string(ket.size()));
    }
    terms[ket] += amp;
  }
  return PhotonState::from_terms(n, terms);
}

PhotonState tensor(const PhotonState& a, const PhotonState& b) {
  PhotonState::Terms terms;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) terms.emplace(concat(ka, kb), va * vb);
  }
  return PhotonState::from_terms(a.n_slots() + b.n_slots(), terms);
}

Amplitude inner_product(const PhotonState& a, const PhotonState& b) {
  if (a.n_slots() != b.n_slots()) {
    throw Error(ErrorKind::dimension, "inner_product: " + std::to_string(a.n_slots()) + " vs " +
                                          std::to_string(b.n_slots()) + " slots");
  }
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Amplitude sum = 0.0;
  for (const auto& [ket, amp] : small) {
    const Amplitude other = large.amplitude(ket);
    if (other == Amplitude{}) continue;
    sum += (&small == &a) ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return sum;
}

Normalized normalize(const PhotonState& s) {
  const double n = s.norm();
  if (n <= kNormTolerance) throw Error(ErrorKind::empty_state, "normalize: norm is numerically zero");
  PhotonState::Terms terms;
  for (const auto& [ket, amp] : s) terms.emplace(ket, amp / n);
  return {PhotonState::from_terms(s.n_slots(), terms), n};
}

bool equal_up_to_global_phase(const PhotonState& a, const PhotonState& b, double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

PhotonState to_mode_occupation(const PhotonState& s, const std::vector<std::size_t>& slots) {
  for (std::size_t slot : slots) {
    if (slot >= s.n_slots()) {
      throw Error(ErrorKind::dimension, "to_mode_occupation: slot " + std::to_string(slot) + " out of range");
    }
  }
  std::vector<std::size_t> positions = slots;
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  PhotonState::Terms summed;
  for (const auto& [ket, amp] : s) {
    std::vector<ModeLabel> labels;
    for (std::size_t p : positions) labels.push_back(ket.slots[p]);
    std::sort(labels.begin(), labels.end());
    BasisKet canonical = ket;
    for (std::size_t i = 0; i < positions.size(); ++i) canonical.slots[positions[i]] = labels[i];
    summed[canonical] += amp;
  }

  PhotonState::Terms terms;
  for (const auto& [ket, amp] : summed) {
    double weight = 1.0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= positions.size(); ++i) {
      if (i < positions.size() && ket.slots[positions[i]] == ket.slots[positions[i - 1]]) {
        weight *= static_cast<double>(++run);
      } else {
        run = 1;
      }
    }
    terms.emplace(ket, amp * std::sqrt(weight));
  }
  return PhotonState::from_terms(s.n_slots(), terms);
}

}  // namespace aomsim
