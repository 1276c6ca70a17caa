#ifndef GHM_ERRORS_HPP
#define GHM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghm {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (rational / complex-rational parsing).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Arithmetic domain violations: division by zero, index out of range,
// nonconvergent parameters, zero scale factors.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

struct NotHermitianError : Error {
    explicit NotHermitianError(const std::string& what) : Error(what) {}
};

struct NotPositiveDefiniteError : Error {
    explicit NotPositiveDefiniteError(const std::string& what) : Error(what) {}
};

// Operation does not apply to the given system (e.g. coefficient bounds
// on a two-basis system).
struct NotApplicableError : Error {
    explicit NotApplicableError(const std::string& what) : Error(what) {}
};

// Parameter-set invariant violations for the matrix families.
struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

} // namespace ghm

#endif
