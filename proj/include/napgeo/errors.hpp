#pragma once

#include <stdexcept>
#include <string>

namespace napgeo {

// Raised by constructions whose preconditions fail (degenerate segment,
// parallel lines, division by zero, ...). The message is the stable
// diagnostic text, e.g. "degenerate triangle".
class GeometryError : public std::domain_error {
 public:
  explicit GeometryError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace napgeo
