#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ped {

enum class ErrorKind {
    NonMonotone,     // partition parts increase
    Negative,        // negative partition part
    Overflow,        // 64-bit checked arithmetic overflowed
    InvalidTableau,
    DuplicateLabel,
    UnknownLabel,
    Cycle,
    ShapeMismatch,
    NotMonotone,     // RPP decreases along a cover
    MissingValue,
    NegativeEntry,
    PosetMismatch,
    TooManyParts,
    DegreeMismatch,
    InvalidExtension,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ped
