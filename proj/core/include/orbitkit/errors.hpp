#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace orbitkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable identifier used in machine-readable error output.
  [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

/// Short scientific rendering of a residual for error messages.
inline std::string format_residual(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

#define ORBITKIT_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                                \
   public:                                                                   \
    using Error::Error;                                                      \
    [[nodiscard]] const char* kind() const noexcept override { return #Name; } \
  }

ORBITKIT_DEFINE_ERROR(DimensionMismatch);
ORBITKIT_DEFINE_ERROR(InvalidStructureConstants);
ORBITKIT_DEFINE_ERROR(JacobiViolation);
ORBITKIT_DEFINE_ERROR(UnknownAlgebra);
ORBITKIT_DEFINE_ERROR(ParseError);
ORBITKIT_DEFINE_ERROR(EigensolverFailure);
ORBITKIT_DEFINE_ERROR(DegenerateProduct);
ORBITKIT_DEFINE_ERROR(NonInvariantProduct);
ORBITKIT_DEFINE_ERROR(NoSamplerAvailable);
ORBITKIT_DEFINE_ERROR(NonEquivariantMap);
ORBITKIT_DEFINE_ERROR(MissingLinearization);
ORBITKIT_DEFINE_ERROR(DegenerateForm);
ORBITKIT_DEFINE_ERROR(TrivialOrbit);
ORBITKIT_DEFINE_ERROR(BasisMismatch);
ORBITKIT_DEFINE_ERROR(BlockMembershipViolation);
ORBITKIT_DEFINE_ERROR(ImageEscape);

#undef ORBITKIT_DEFINE_ERROR

}  // namespace orbitkit
