#pragma once

#include <stdexcept>
#include <string>

namespace cm {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different coordinate dimensions.
struct dimension_mismatch : error {
    using error::error;
};

/// A comparison or extraction was requested beyond the carried truncation.
struct under_truncated : error {
    using error::error;
};

/// A mathematical precondition failed (degenerate Levi form, input not in
/// normal form, umbilic origin where a nonumbilic one is required, ...).
struct precondition_error : error {
    using error::error;
};

/// An exact root does not exist over the Gaussian rationals.  Carries the
/// radicand so the caller can report exactly what failed.
struct irrational_scaling : error {
    explicit irrational_scaling(const std::string& what, std::string radicand_)
        : error(what), radicand(std::move(radicand_)) {}
    std::string radicand;
};

/// Malformed input file (syntax level).
struct parse_error : error {
    using error::error;
};

/// Structurally valid file whose content violates a domain invariant
/// (reality, truncation bound, non-canonical rational, ...).
struct validation_error : error {
    using error::error;
};

/// An exact linear solve behaved contrary to the theory backing it
/// (inconsistent or underdetermined system where a unique solution is due).
struct solver_error : error {
    using error::error;
};

} // namespace cm
