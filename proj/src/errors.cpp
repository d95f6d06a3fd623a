#include "aomsim/errors.hpp"

namespace aomsim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension_error";
    case ErrorKind::empty_state: return "empty_state_error";
    case ErrorKind::unnormalized: return "unnormalized_state_error";
    case ErrorKind::invalid_params: return "invalid_params_error";
    case ErrorKind::mode_collision: return "mode_collision_error";
    case ErrorKind::composition: return "composition_error";
    case ErrorKind::bipartition: return "bipartition_error";
    case ErrorKind::comparison: return "comparison_error";
    case ErrorKind::symmetry: return "symmetry_error";
    case ErrorKind::structure: return "structure_error";
    case ErrorKind::empty_selection: return "empty_selection_error";
    case ErrorKind::parse: return "parse_error";
  }
  return "unknown_error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace aomsim
