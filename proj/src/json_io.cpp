#include "aomsim/json_io.hpp"

#include <cmath>

#include "aomsim/errors.hpp"

namespace aomsim {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::parse, field + ": " + why);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing");
  return *it;
}

double finite_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "not finite");
  return v;
}

json complex_to_json(Complex z) { return json::array({round_fixed(z.real()), round_fixed(z.imag())}); }

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected [re, im]");
  return {finite_number(j[0], field + "[0]"), finite_number(j[1], field + "[1]")};
}

json label_to_json(const ModeLabel& l) { return json::array({l.spatial, l.freq.k}); }

ModeLabel label_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected [spatial, frequency_index]");
  if (!j[0].is_string() || j[0].get<std::string>().empty()) fail(field + "[0]", "expected nonempty string");
  if (!j[1].is_number_integer()) fail(field + "[1]", "expected integer frequency index");
  return {j[0].get<std::string>(), j[1].get<int>()};
}

json ket_to_json(const BasisKet& k) {
  json out = json::array();
  for (const auto& l : k.slots) out.push_back(label_to_json(l));
  return out;
}

std::vector<ModeLabel> labels_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of labels");
  std::vector<ModeLabel> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(label_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json reals_to_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(round_fixed(x));
  return out;
}

}  // namespace

double round_fixed(double x) {
  const double scale = std::pow(10.0, kReportDecimals);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

json state_to_json(const PhotonState& s) {
  json terms = json::array();
  for (const auto& [ket, amp] : s) terms.push_back({{"ket", ket_to_json(ket)}, {"amp", complex_to_json(amp)}});
  return {{"n_slots", s.n_slots()}, {"terms", std::move(terms)}};
}

PhotonState state_from_json(const json& j) {
  const json& n = member(j, "n_slots", "state");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) fail("state.n_slots", "expected a positive integer");
  const std::size_t n_slots = n.get<std::size_t>();
  const json& terms = member(j, "terms", "state");
  if (!terms.is_array() || terms.empty()) fail("state.terms", "expected a nonempty array");

  std::vector<std::pair<BasisKet, Amplitude>> items;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "state.terms[" + std::to_string(i) + "]";
    BasisKet ket{labels_from_json(member(terms[i], "ket", where), where + ".ket")};
    if (ket.size() != n_slots) {
      fail(where + ".ket", "length " + std::to_string(ket.size()) + " differs from n_slots " + std::to_string(n_slots));
    }
    items.emplace_back(std::move(ket), complex_from_json(member(terms[i], "amp", where), where + ".amp"));
  }
  return make_state(items);
}

json transform_to_json(const ModeTransform& m) {
  json in = json::array();
  json out = json::array();
  for (const auto& l : m.inputs()) in.push_back(label_to_json(l));
  for (const auto& l : m.outputs()) out.push_back(label_to_json(l));
  return {{"inputs", std::move(in)}, {"outputs", std::move(out)}, {"matrix", matrix_to_json(m.matrix())}};
}

ModeTransform transform_from_json(const json& j) {
  auto inputs = labels_from_json(member(j, "inputs", "transform"), "transform.inputs");
  auto outputs = labels_from_json(member(j, "outputs", "transform"), "transform.outputs");
  const json& rows = member(j, "matrix", "transform");
  if (!rows.is_array() || rows.size() != outputs.size()) {
    fail("transform.matrix", "expected " + std::to_string(outputs.size()) + " rows (one per output)");
  }
  CMatrix m(outputs.size(), inputs.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "transform.matrix[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != inputs.size()) {
      fail(where, "expected " + std::to_string(inputs.size()) + " entries (one per input)");
    }
    for (std::size_t c = 0; c < inputs.size(); ++c) {
      m(r, c) = complex_from_json(rows[r][c], where + "[" + std::to_string(c) + "]");
    }
  }
  try {
    return ModeTransform(std::move(inputs), std::move(outputs), std::move(m));
  } catch (const Error& e) {
    fail("transform", e.what());
  }
}

json density_to_json(const DensityMatrix& rho) {
  json basis = json::array();
  for (const auto& k : rho.basis) basis.push_back(ket_to_json(k));
  return {{"kept_slots", rho.kept_slots}, {"basis", std::move(basis)}, {"matrix", matrix_to_json(rho.matrix)}};
}

json isometry_to_json(const IsometryReport& r) {
  return {{"gram_deviation", round_fixed(r.gram_deviation)},
          {"is_isometry", r.is_isometry},
          {"is_unitary", r.is_unitary},
          {"worst_pair_overlap", complex_to_json(r.worst_pair_overlap)}};
}

json swap_report_to_json(const SwapReport& r, const Tolerances& tol) {
  return {
      {"tool_version", AOMSIM_VERSION},
      {"tolerances", {{"audit", tol.audit}, {"swap_verdict", tol.swap_verdict}}},
      {"transform_kind", std::string(to_string(r.transform_kind))},
      {"phi1", round_fixed(r.phi1)},
      {"phi2", round_fixed(r.phi2)},
      {"norm_after_aoms", round_fixed(r.norm_after_aoms)},
      {"postselect_probability", round_fixed(r.postselect_probability)},
      {"factor_overlap", complex_to_json(r.factor_overlap)},
      {"rho14_negativity", round_fixed(r.rho14_negativity)},
      {"rho14_eigenvalues", reals_to_json(r.rho14_eigenvalues)},
      {"nosignal_trace_distance", round_fixed(r.nosignal_trace_distance)},
      {"swapping_verdict", r.swapping_verdict},
  };
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, what + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

}  // namespace aomsim
