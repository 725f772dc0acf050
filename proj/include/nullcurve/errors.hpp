#pragma once

#include <stdexcept>
#include <string>

namespace nullcurve {

/// Base of all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInRealForm : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct LogBranchFailure : Error { using Error::Error; };
struct SingularGroupElement : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct NotImmersion : Error { using Error::Error; };
struct NoLiftBranch : Error { using Error::Error; };
struct ChartBranchFailure : Error { using Error::Error; };
struct DegeneratePlane : Error { using Error::Error; };
struct NotFlat : Error { using Error::Error; };
struct NotALift : Error { using Error::Error; };
struct StepCountTooSmall : Error { using Error::Error; };
struct OpenPath : Error { using Error::Error; };
struct NotConformal : Error { using Error::Error; };
struct SingularMetric : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UnknownEntry : Error { using Error::Error; };

} // namespace nullcurve
