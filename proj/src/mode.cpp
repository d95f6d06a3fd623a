#include "aomsim/mode.hpp"

#include <utility>

#include "aomsim/errors.hpp"

namespace aomsim {

ModeLabel::ModeLabel(std::string spatial_token, FrequencyIndex frequency)
    : spatial(std::move(spatial_token)), freq(frequency) {
  if (spatial.empty()) {
    throw Error(ErrorKind::invalid_params, "mode label: empty spatial token");
  }
}

BasisKet concat(const BasisKet& a, const BasisKet& b) {
  BasisKet out;
  out.slots.reserve(a.size() + b.size());
  out.slots.insert(out.slots.end(), a.slots.begin(), a.slots.end());
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  return out;
}

BasisKet restrict(const BasisKet& ket, const std::vector<std::size_t>& slots) {
  BasisKet out;
  out.slots.reserve(slots.size());
  for (std::size_t s : slots) out.slots.push_back(ket.slots.at(s));
  return out;
}

std::string ket_notation(const ModeLabel& label) {
  std::string freq = "ω";
  const int k = label.freq.k;
  if (k == 1) {
    freq += "+δ";
  } else if (k == -1) {
    freq += "-δ";
  } else if (k > 1) {
    freq += "+" + std::to_string(k) + "δ";
  } else if (k < -1) {
    freq += "-" + std::to_string(-k) + "δ";
  }
  return "|" + freq + "⟩_{" + label.spatial + "}";
}

std::string ket_notation(const BasisKet& ket) {
  std::string out;
  for (const auto& label : ket.slots) out += ket_notation(label);
  return out;
}

}  // namespace aomsim
