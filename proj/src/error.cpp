#include "semicrossed/error.hpp"

namespace semicrossed {

const char* errcName(Errc code) {
  switch (code) {
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::InvalidSystem: return "InvalidSystem";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::SeparationImpossible: return "SeparationImpossible";
    case Errc::NotPeriodic: return "NotPeriodic";
    case Errc::NotSemicrossed: return "NotSemicrossed";
    case Errc::DepthTooLarge: return "DepthTooLarge";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::WrongForm: return "WrongForm";
    case Errc::OrbitCollision: return "OrbitCollision";
    case Errc::BadLambda: return "BadLambda";
    case Errc::BadInput: return "BadInput";
    case Errc::NonFinite: return "NonFinite";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace semicrossed
