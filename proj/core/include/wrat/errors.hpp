#pragma once

#include <stdexcept>
#include <string>

namespace wrat {

enum class ErrorKind {
    IllegalType,
    DimensionMismatch,
    UnknownRoot,
    InvalidRecord,
    NotExceptionalType,
    InvalidPartition,
    NoSl2Completion,
    NotDegreeMinusOne,
    VNotInCentralizer,
    GradingNotGood,
    GradingNotEven,
    Resonance,
    SeedInconsistent,
    MissingSeed,
    NonPolynomialCoefficient,
    ContractionFails,
    BranchMismatch,
    OutOfRadius,
    InvalidDomain,
    InvalidInput,
    ParseError,
    IoError,
};

const char *kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code and a JSON diagnostic.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace wrat
