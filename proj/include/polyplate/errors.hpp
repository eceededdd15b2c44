// Exception types used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace polyplate {

/// Invalid user-supplied parameter (degrees, counts, penalty values, ...).
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mesh construction or validation failure (non-conforming cells, inverted
/// cells, duplicate faces, dangling vertices, degenerate subtriangles).
struct mesh_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed mesh or config file; carries line/field context in the message.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerically singular local problem (degenerate cell, ill-conditioned Gram).
struct conditioning_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested derivative order or quadrature degree beyond what is supported.
struct unsupported_order : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear solver breakdown or failure to reach the requested tolerance.
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyplate
