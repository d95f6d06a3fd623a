#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace aomsim {

// Photon frequency omega + k*delta on an exact integer grid; omega itself is
// symbolic.
struct FrequencyIndex {
  int k = 0;

  auto operator<=>(const FrequencyIndex&) const = default;
};

inline FrequencyIndex operator+(FrequencyIndex f, int steps) { return {f.k + steps}; }

// One single-photon mode: spatial path token plus frequency.
struct ModeLabel {
  std::string spatial;
  FrequencyIndex freq;

  ModeLabel() = default;
  ModeLabel(std::string spatial_token, FrequencyIndex frequency);
  ModeLabel(std::string spatial_token, int k) : ModeLabel(std::move(spatial_token), FrequencyIndex{k}) {}

  auto operator<=>(const ModeLabel&) const = default;
};

// Ordered slot list; slot i holds photon i.
struct BasisKet {
  std::vector<ModeLabel> slots;

  std::size_t size() const { return slots.size(); }
  const ModeLabel& operator[](std::size_t i) const { return slots[i]; }

  auto operator<=>(const BasisKet&) const = default;
};

BasisKet concat(const BasisKet& a, const BasisKet& b);

// Sub-ket made of the listed slot positions, in the listed order.
BasisKet restrict(const BasisKet& ket, const std::vector<std::size_t>& slots);

// "|ω+δ⟩_{1'}"
std::string ket_notation(const ModeLabel& label);
std::string ket_notation(const BasisKet& ket);

}  // namespace aomsim
