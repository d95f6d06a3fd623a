#pragma once

#include <cstddef>
#include <vector>

#include "aomsim/linalg.hpp"
#include "aomsim/mode.hpp"
#include "aomsim/photon_state.hpp"

namespace aomsim {

// Zero-based slot positions. Functions taking a slot set accept any order and
// ignore duplicates.
using SlotSet = std::vector<std::size_t>;

// Reduced state on `kept_slots`. The basis lists only sub-kets in the support,
// in lexicographic (spatial token, frequency) order.
struct DensityMatrix {
  SlotSet kept_slots;
  std::vector<BasisKet> basis;
  CMatrix matrix;
};

struct SchmidtSpectrum {
  std::vector<double> values;  // descending, nonnegative
};

// |s><s| on all slots.
DensityMatrix density_matrix(const PhotonState& s);

// Tr over the complement of `keep`. Requires a normalized state and a
// nonempty proper subset of the slots.
DensityMatrix partial_trace(const PhotonState& s, const SlotSet& keep);

SchmidtSpectrum schmidt(const PhotonState& s, const SlotSet& left);

// Von Neumann entropy in bits: -sum l^2 log2 l^2.
double entropy(const SchmidtSpectrum& spectrum);

// Partial transpose over `transpose_side` (a nonempty proper subset of
// rho.kept_slots), embedded in the product of the two local bases. Rows are
// indexed by (side ket, rest ket) with the side index major.
CMatrix partial_transpose(const DensityMatrix& rho, const SlotSet& transpose_side);

// Sum of |negative eigenvalues| of the partial transpose; a Bell pair gives
// 0.5. Zero is a separability proof only when the local dimensions are 2x2
// or 2x3; for larger splits a zero leaves bound entanglement undetected.
double negativity(const DensityMatrix& rho, const SlotSet& transpose_side);

// (1/2) sum |eig(a - b)| after aligning both matrices on the union of their
// bases. Throws comparison when kept_slots differ.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace aomsim
