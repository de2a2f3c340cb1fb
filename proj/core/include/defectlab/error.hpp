#pragma once

#include <stdexcept>
#include <string>

namespace defectlab {

// Broad failure categories surfaced by the library.  The CLI maps these to
// exit codes (input problems vs. failed checks), so every throw site picks
// the kind deliberately.
enum class ErrorKind {
    InvalidInput,      // malformed arguments, violated preconditions
    AmbientMismatch,   // incompatible dimensions between operands
    InconclusiveAtCap, // emptiness sweep reached its degree cap undecided
    PositionViolation, // family fails the required intersection condition
    SearchFailure,     // randomized construction exhausted its retry budget
    Degeneracy,        // a map collapses into a hypersurface / constant
    Dependence,        // claimed independent functions are dependent
    NumericFailure,    // quadrature or root finding did not converge
    UndefinedDefect,   // defect requested for a bounded characteristic
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
    case ErrorKind::InconclusiveAtCap: return "inconclusive-at-cap";
    case ErrorKind::PositionViolation: return "position-violation";
    case ErrorKind::SearchFailure: return "search-failure";
    case ErrorKind::Degeneracy: return "degeneracy";
    case ErrorKind::Dependence: return "dependence";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::UndefinedDefect: return "undefined-defect";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace defectlab
