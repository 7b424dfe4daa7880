#ifndef ALGDEG_ERROR_HPP
#define ALGDEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algdeg {

/// A caller violated a documented precondition (bad input, wrong shape,
/// reducible minimal polynomial, conjugate pair where distinct ones are needed).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Factorization was requested above the supported degree.
class CeilingExceeded : public PreconditionError {
public:
    explicit CeilingExceeded(const std::string& what) : PreconditionError(what) {}
};

/// A certified comparison could not be resolved within the precision cap.
class Undetermined : public std::runtime_error {
public:
    explicit Undetermined(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace algdeg

#endif
