#ifndef SLP_ERROR_HPP
#define SLP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace slp {

/// Single exception type for all validation and arithmetic failures.
/// The code is stable and machine-readable; the message is for humans.
class Error : public std::runtime_error {
public:
  enum class Code {
    NotPrime,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    ArityMismatch,
    ContextMismatch,
    ExponentOverflow,
    NotLinear,
    SingularSubstitution,
    NonHomogeneousInput,
    NotArtinian,
    WrongTermOrder,
    ZeroCandidate,
    ParseError,
    InvalidArgument,
  };

  Error(Code code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Code code() const noexcept { return code_; }

private:
  Code code_;
};

/// Stable identifier used in machine-readable error reports.
const char* error_code_name(Error::Code code) noexcept;

} // namespace slp

#endif
