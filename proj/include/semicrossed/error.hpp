#pragma once

#include <stdexcept>
#include <string>

namespace semicrossed {

enum class Errc {
  TypeMismatch,
  InvalidSystem,
  InvalidPoint,
  InvalidMatrix,
  SeparationImpossible,
  NotPeriodic,
  NotSemicrossed,
  DepthTooLarge,
  WindowTooSmall,
  WrongForm,
  OrbitCollision,
  BadLambda,
  BadInput,
  NonFinite,
  Parse,
};

const char* errcName(Errc code);

/// Every failure in the library is reported with one of these; `code()` is
/// the machine-readable part, `what()` carries the context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errcName(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace semicrossed
