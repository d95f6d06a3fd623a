#include "aomsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "aomsim/errors.hpp"

namespace aomsim {

namespace {

SlotSet canonical(SlotSet slots) {
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return slots;
}

// Validates `part` as a nonempty proper subset of {0..n-1}; returns it and its
// complement, both sorted.
std::pair<SlotSet, SlotSet> bipartition(const SlotSet& part, std::size_t n, const char* who) {
  SlotSet a = canonical(part);
  if (a.empty() || a.size() >= n) {
    throw Error(ErrorKind::bipartition, std::string(who) + ": slot subset must be nonempty and proper");
  }
  if (a.back() >= n) {
    throw Error(ErrorKind::bipartition,
                std::string(who) + ": slot " + std::to_string(a.back()) + " out of range");
  }
  SlotSet b;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(a.begin(), a.end(), i)) b.push_back(i);
  }
  return {a, b};
}

void require_normalized(const PhotonState& s, const char* who) {
  if (!s.normalized()) {
    throw Error(ErrorKind::unnormalized, std::string(who) + ": state norm is " + std::to_string(s.norm()));
  }
}

std::map<BasisKet, std::size_t> index_of(const std::vector<BasisKet>& basis) {
  std::map<BasisKet, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

CMatrix embed(const DensityMatrix& rho, const std::map<BasisKet, std::size_t>& target, std::size_t dim) {
  CMatrix out(dim, dim);
  for (std::size_t i = 0; i < rho.basis.size(); ++i) {
    const std::size_t r = target.at(rho.basis[i]);
    for (std::size_t j = 0; j < rho.basis.size(); ++j) out(r, target.at(rho.basis[j])) = rho.matrix(i, j);
  }
  return out;
}

}  // namespace

DensityMatrix density_matrix(const PhotonState& s) {
  require_normalized(s, "density_matrix");
  DensityMatrix rho;
  for (std::size_t i = 0; i < s.n_slots(); ++i) rho.kept_slots.push_back(i);
  std::vector<Amplitude> amps;
  for (const auto& [ket, amp] : s) {
    rho.basis.push_back(ket);
    amps.push_back(amp);
  }
  rho.matrix = CMatrix(amps.size(), amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    for (std::size_t j = 0; j < amps.size(); ++j) rho.matrix(i, j) = amps[i] * std::conj(amps[j]);
  }
  return rho;
}

DensityMatrix partial_trace(const PhotonState& s, const SlotSet& keep) {
  auto [kept, traced] = bipartition(keep, s.n_slots(), "partial_trace");
  require_normalized(s, "partial_trace");

  std::map<BasisKet, std::map<BasisKet, Amplitude>> by_environment;
  std::set<BasisKet> support;
  for (const auto& [ket, amp] : s) {
    BasisKet sys = restrict(ket, kept);
    support.insert(sys);
    by_environment[restrict(ket, traced)][sys] += amp;
  }

  DensityMatrix rho;
  rho.kept_slots = kept;
  rho.basis.assign(support.begin(), support.end());
  const auto idx = index_of(rho.basis);
  rho.matrix = CMatrix(rho.basis.size(), rho.basis.size());
  for (const auto& [env, column] : by_environment) {
    for (const auto& [ki, ai] : column) {
      for (const auto& [kj, aj] : column) rho.matrix(idx.at(ki), idx.at(kj)) += ai * std::conj(aj);
    }
  }
  return rho;
}

SchmidtSpectrum schmidt(const PhotonState& s, const SlotSet& left) {
  auto [lhs, rhs] = bipartition(left, s.n_slots(), "schmidt");
  require_normalized(s, "schmidt");

  std::map<BasisKet, std::size_t> rows;
  std::map<BasisKet, std::size_t> cols;
  for (const auto& [ket, amp] : s) {
    rows.emplace(restrict(ket, lhs), 0);
    cols.emplace(restrict(ket, rhs), 0);
  }
  std::size_t i = 0;
  for (auto& [k, v] : rows) v = i++;
  i = 0;
  for (auto& [k, v] : cols) v = i++;

  CMatrix coeff(rows.size(), cols.size());
  for (const auto& [ket, amp] : s) coeff(rows.at(restrict(ket, lhs)), cols.at(restrict(ket, rhs))) = amp;

  // Singular values from the smaller Gram matrix.
  const CMatrix gram = rows.size() <= cols.size() ? coeff * coeff.adjoint() : coeff.adjoint() * coeff;
  SchmidtSpectrum spectrum;
  for (double ev : hermitian_eigenvalues(gram)) spectrum.values.push_back(std::sqrt(std::max(ev, 0.0)));
  return spectrum;
}

double entropy(const SchmidtSpectrum& spectrum) {
  double h = 0.0;
  for (double v : spectrum.values) {
    const double p = v * v;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

CMatrix partial_transpose(const DensityMatrix& rho, const SlotSet& transpose_side) {
  const SlotSet side = canonical(transpose_side);
  if (side.empty() || side.size() >= rho.kept_slots.size()) {
    throw Error(ErrorKind::bipartition, "partial_transpose: side must be a nonempty proper subset of kept slots");
  }
  // Positions of side / rest slots inside the reduced kets.
  SlotSet side_pos;
  SlotSet rest_pos;
  for (std::size_t p = 0; p < rho.kept_slots.size(); ++p) {
    (std::binary_search(side.begin(), side.end(), rho.kept_slots[p]) ? side_pos : rest_pos).push_back(p);
  }
  if (side_pos.size() != side.size()) {
    throw Error(ErrorKind::bipartition, "partial_transpose: side contains slots that were traced out");
  }

  std::map<BasisKet, std::size_t> a_index;
  std::map<BasisKet, std::size_t> b_index;
  for (const auto& ket : rho.basis) {
    a_index.emplace(restrict(ket, side_pos), 0);
    b_index.emplace(restrict(ket, rest_pos), 0);
  }
  std::size_t i = 0;
  for (auto& [k, v] : a_index) v = i++;
  i = 0;
  for (auto& [k, v] : b_index) v = i++;
  const std::size_t db = b_index.size();

  std::vector<std::size_t> a_of(rho.basis.size());
  std::vector<std::size_t> b_of(rho.basis.size());
  for (std::size_t n = 0; n < rho.basis.size(); ++n) {
    a_of[n] = a_index.at(restrict(rho.basis[n], side_pos));
    b_of[n] = b_index.at(restrict(rho.basis[n], rest_pos));
  }

  const std::size_t dim = a_index.size() * db;
  CMatrix out(dim, dim);
  for (std::size_t r = 0; r < rho.basis.size(); ++r) {
    for (std::size_t c = 0; c < rho.basis.size(); ++c) {
      // <a_r b_r| rho |a_c b_c>  ->  <a_c b_r| rho^TA |a_r b_c>
      out(a_of[c] * db + b_of[r], a_of[r] * db + b_of[c]) = rho.matrix(r, c);
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho, const SlotSet& transpose_side) {
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(partial_transpose(rho, transpose_side))) {
    if (ev < 0.0) sum -= ev;
  }
  return sum;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (canonical(a.kept_slots) != canonical(b.kept_slots)) {
    throw Error(ErrorKind::comparison, "trace_distance: density matrices live on different slots");
  }
  std::set<BasisKet> all(a.basis.begin(), a.basis.end());
  all.insert(b.basis.begin(), b.basis.end());
  const std::vector<BasisKet> basis(all.begin(), all.end());
  const auto idx = index_of(basis);
  const CMatrix diff = embed(a, idx, basis.size()) - embed(b, idx, basis.size());
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(diff)) sum += std::abs(ev);
  return 0.5 * sum;
}

}  // namespace aomsim
