#ifndef PSALG_ERRORS_HPP
#define PSALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psalg {

// Base class for everything the kernel can throw on purpose.
struct KernelError : std::runtime_error {
    explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structure constants fail c_{ij} = -c_{ji} (or c_{ii} != 0).
struct AntisymmetryViolation : KernelError {
    int i, j;
    AntisymmetryViolation(int i_, int j_, const std::string& msg)
        : KernelError(msg), i(i_), j(j_) {}
};

// Structure constants fail the Jacobi identity on a basis triple.
struct JacobiViolation : KernelError {
    int i, j, k;
    JacobiViolation(int i_, int j_, int k_, const std::string& msg)
        : KernelError(msg), i(i_), j(j_), k(k_) {}
};

// An operation would produce terms above the configured degree cap.
struct DegreeCapExceeded : KernelError {
    using KernelError::KernelError;
};

// Straightening exceeded its rewrite-step budget (runaway input).
struct StepLimitExceeded : KernelError {
    using KernelError::KernelError;
};

// Operands live over different Lie algebras.
struct AmbientMismatch : KernelError {
    using KernelError::KernelError;
};

// Unparseable or schema-violating input (files, rationals, ids).
struct MalformedInput : KernelError {
    using KernelError::KernelError;
};

// A multiplication table handed to current() is not left-symmetric.
struct NotPreLie : KernelError {
    using KernelError::KernelError;
};

// A basis change whose P * Pinv is not the identity over H.
struct NonInvertible : KernelError {
    using KernelError::KernelError;
};

// The residual of the requested equation is not linear in the unknown.
struct NotLinear : KernelError {
    using KernelError::KernelError;
};

// Catalog entry or equation label that does not exist.
struct UnknownId : KernelError {
    using KernelError::KernelError;
};

// A nullspace request over a negative degree bound.
struct EmptyBasisDomain : KernelError {
    using KernelError::KernelError;
};

}  // namespace psalg

#endif
