#include "pedestal/error.hpp"

namespace ped {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::Negative: return "Negative";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::Cycle: return "Cycle";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::PosetMismatch: return "PosetMismatch";
    case ErrorKind::TooManyParts: return "TooManyParts";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidExtension: return "InvalidExtension";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace ped
