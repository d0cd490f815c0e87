#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrshift {

enum class ErrorKind {
    InvalidDegree,
    RootfindFailure,
    NotSingularOnTorus,
    UnstableDenominator,
    DenominatorZero,
    ExceptionalSlice,
    ZeroOutsideDisk,
    NotHermitian,
    NonpositiveCoefficient,
    InvalidFamily,
    InvalidArgument,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// Mathematical validation failures (bad factors, singular evaluation points, ...)
/// versus usage problems (malformed configs, bad arguments).
bool is_validation_failure(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace nrshift
