#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

enum class ErrorKind {
    OutOfRange,          // vertex index outside 0..m-1
    AdjacentEndpoints,   // diagonal endpoints equal or cyclically adjacent
    Crossing,            // two diagonals cross in the interior
    Duplicate,           // diagonal listed twice
    RingMismatch,        // weights requested in a ring that cannot hold them
    NotDivisor,          // part size does not divide the ring modulus
    SpecMismatch,        // arithmetic between elements of different rings
    ClosureFailure,      // diagonal recurrence does not return to 1, 0
    NotATriangulation,   // dissection has a part larger than a triangle
    NotAQuiddity,        // ear reduction fails
    NoEar,               // trivial dissection has no ear to cut
    CapExceeded,         // enumeration requested beyond the configured cap
    SyntaxError,         // malformed input text
    IndexOutOfRange,     // row index outside the stored pattern
    PreconditionViolation,
    Overflow,            // 64-bit coefficient arithmetic overflowed
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::AdjacentEndpoints: return "AdjacentEndpoints";
        case ErrorKind::Crossing: return "Crossing";
        case ErrorKind::Duplicate: return "Duplicate";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NotDivisor: return "NotDivisor";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::ClosureFailure: return "ClosureFailure";
        case ErrorKind::NotATriangulation: return "NotATriangulation";
        case ErrorKind::NotAQuiddity: return "NotAQuiddity";
        case ErrorKind::NoEar: return "NoEar";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Base class for every error thrown by this library.  `kind()` is stable
/// and machine-checkable; `what()` is for humans.
class FriezeError : public std::runtime_error {
  public:
    FriezeError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace frieze
