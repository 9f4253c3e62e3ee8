#include "wrat/errors.hpp"

namespace wrat {

const char *kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::IllegalType: return "IllegalType";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::InvalidRecord: return "InvalidRecord";
    case ErrorKind::NotExceptionalType: return "NotExceptionalType";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NoSl2Completion: return "NoSl2Completion";
    case ErrorKind::NotDegreeMinusOne: return "NotDegreeMinusOne";
    case ErrorKind::VNotInCentralizer: return "VNotInCentralizer";
    case ErrorKind::GradingNotGood: return "GradingNotGood";
    case ErrorKind::GradingNotEven: return "GradingNotEven";
    case ErrorKind::Resonance: return "Resonance";
    case ErrorKind::SeedInconsistent: return "SeedInconsistent";
    case ErrorKind::MissingSeed: return "MissingSeed";
    case ErrorKind::NonPolynomialCoefficient: return "NonPolynomialCoefficient";
    case ErrorKind::ContractionFails: return "ContractionFails";
    case ErrorKind::BranchMismatch: return "BranchMismatch";
    case ErrorKind::OutOfRadius: return "OutOfRadius";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace wrat
