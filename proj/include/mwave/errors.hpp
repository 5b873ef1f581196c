#pragma once

#include <stdexcept>
#include <string>

namespace mwave {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonAdmissible : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct DegenerateSymbol : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TruncationWarning : Error { using Error::Error; };
struct NotUnitVector : Error { using Error::Error; };
struct GridTooNarrow : Error { using Error::Error; };
struct DegenerateFit : Error { using Error::Error; };
struct SingularTriangle : Error { using Error::Error; };
struct AliasWarning : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace mwave
