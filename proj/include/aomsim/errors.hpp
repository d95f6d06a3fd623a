#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aomsim {

enum class ErrorKind {
  dimension,
  empty_state,
  unnormalized,
  invalid_params,
  mode_collision,
  composition,
  bipartition,
  comparison,
  symmetry,
  structure,
  empty_selection,
  parse,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; kind() is stable and
// machine-readable, what() carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace aomsim
