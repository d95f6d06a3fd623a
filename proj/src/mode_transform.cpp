#include "aomsim/mode_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "aomsim/errors.hpp"

namespace aomsim {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_unique(const std::vector<ModeLabel>& labels, const char* what) {
  std::set<ModeLabel> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::invalid_params,
                  std::string("transform: duplicate ") + what + " label " + ket_notation(l));
    }
  }
}

ModeTransform two_port(const AOMPorts& ports, Complex low_to_low, Complex low_to_high, Complex high_to_low,
                       Complex high_to_high) {
  ports.validate();
  CMatrix m{{low_to_low, high_to_low}, {low_to_high, high_to_high}};
  return ModeTransform({ports.in_low, ports.in_high}, {ports.out_low, ports.out_high}, std::move(m));
}

}  // namespace

void AOMPorts::validate() const {
  if (in_high.freq != in_low.freq + 1) {
    throw Error(ErrorKind::invalid_params, "aom: in_high must be one frequency step above in_low");
  }
  if (out_high.freq != out_low.freq + 1) {
    throw Error(ErrorKind::invalid_params, "aom: out_high must be one frequency step above out_low");
  }
  require_unique({in_low, in_high, out_low, out_high}, "port");
}

AOMParams AOMParams::from_coupling(std::complex<double> g, std::complex<double> beta, double t, AOMPorts ports) {
  const Complex gb = g * beta;
  return {std::abs(gb) * t, std::arg(gb), std::move(ports)};
}

ModeTransform::ModeTransform(std::vector<ModeLabel> inputs, std::vector<ModeLabel> outputs, CMatrix matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
  require_unique(inputs_, "input");
  require_unique(outputs_, "output");
  if (matrix_.rows() != outputs_.size() || matrix_.cols() != inputs_.size()) {
    throw Error(ErrorKind::dimension, "transform: matrix is " + std::to_string(matrix_.rows()) + "x" +
                                          std::to_string(matrix_.cols()) + " for " +
                                          std::to_string(outputs_.size()) + " outputs and " +
                                          std::to_string(inputs_.size()) + " inputs");
  }
}

std::optional<std::size_t> ModeTransform::input_index(const ModeLabel& label) const {
  auto it = std::find(inputs_.begin(), inputs_.end(), label);
  if (it == inputs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - inputs_.begin());
}

std::vector<std::pair<ModeLabel, Complex>> ModeTransform::image(std::size_t j) const {
  std::vector<std::pair<ModeLabel, Complex>> out;
  for (std::size_t r = 0; r < outputs_.size(); ++r) {
    if (matrix_(r, j) != Complex{}) out.emplace_back(outputs_[r], matrix_(r, j));
  }
  return out;
}

ModeTransform identity_transform(std::vector<ModeLabel> labels) {
  const std::size_t n = labels.size();
  return ModeTransform(labels, labels, CMatrix::identity(n));
}

ModeTransform aom_evolution(const AOMParams& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return two_port(p.ports, c, -kI * std::polar(1.0, p.phi) * s, -kI * std::polar(1.0, -p.phi) * s, c);
}

ModeTransform balanced_aom(double phi, double second_leg_phase, const AOMPorts& ports) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex leg = std::polar(1.0, second_leg_phase);
  return two_port(ports, h, -kI * std::polar(1.0, phi) * h, leg * (-kI) * std::polar(1.0, -phi) * h, leg * h);
}

ModeTransform flawed_aom(const AOMPorts& ports) {
  const double h = std::numbers::sqrt2 / 2.0;
  return two_port(ports, h, h, h, h);
}

IsometryReport isometry_report(const ModeTransform& m, double tol) {
  const CMatrix& mat = m.matrix();
  const CMatrix gram = mat.adjoint() * mat;
  IsometryReport report;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Complex target = i == j ? Complex{1.0} : Complex{};
      report.gram_deviation = std::max(report.gram_deviation, std::abs(gram(i, j) - target));
      if (i != j && std::abs(gram(i, j)) > std::abs(report.worst_pair_overlap)) {
        report.worst_pair_overlap = gram(i, j);
      }
    }
  }
  report.is_isometry = report.gram_deviation <= tol;
  if (report.is_isometry && mat.square()) {
    const CMatrix co_gram = mat * mat.adjoint();
    report.is_unitary = (co_gram - CMatrix::identity(co_gram.rows())).max_abs() <= tol;
  }
  return report;
}

PhotonState apply(const ModeTransform& m, const PhotonState& s) {
  const std::set<ModeLabel> outputs(m.outputs().begin(), m.outputs().end());

  // Images cached per input column.
  std::vector<std::vector<std::pair<ModeLabel, Complex>>> images(m.inputs().size());
  for (std::size_t j = 0; j < images.size(); ++j) images[j] = m.image(j);

  PhotonState::Terms terms;
  for (const auto& [ket, amp] : s) {
    // Partial expansions: (ket prefix, amplitude).
    std::vector<std::pair<BasisKet, Complex>> partial{{BasisKet{}, amp}};
    for (const auto& label : ket.slots) {
      auto j = m.input_index(label);
      if (!j) {
        if (outputs.contains(label)) {
          throw Error(ErrorKind::mode_collision,
                      "apply: untouched slot already occupies output mode " + ket_notation(label));
        }
        for (auto& [prefix, a] : partial) prefix.slots.push_back(label);
        continue;
      }
      std::vector<std::pair<BasisKet, Complex>> next;
      next.reserve(partial.size() * images[*j].size());
      for (const auto& [prefix, a] : partial) {
        for (const auto& [out, coeff] : images[*j]) {
          BasisKet extended = prefix;
          extended.slots.push_back(out);
          next.emplace_back(std::move(extended), a * coeff);
        }
      }
      partial = std::move(next);
    }
    for (auto& [k, a] : partial) terms[std::move(k)] += a;
  }
  return PhotonState::from_terms(s.n_slots(), terms);
}

ModeTransform compose(const ModeTransform& first, const ModeTransform& second) {
  if (second.inputs() != first.outputs()) {
    throw Error(ErrorKind::composition, "compose: second transform's inputs must equal first's outputs");
  }
  return ModeTransform(first.inputs(), second.outputs(), second.matrix() * first.matrix());
}

double distance_up_to_phase(const ModeTransform& a, const ModeTransform& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
    return std::numeric_limits<double>::infinity();
  }
  // Align on the phase of tr(B^dag A), which is optimal in the Frobenius sense.
  const Complex overlap = (b.matrix().adjoint() * a.matrix()).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (a.matrix() - phase * b.matrix()).max_abs();
}

}  // namespace aomsim
