#pragma once

#include <stdexcept>
#include <string>

namespace cech {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point id outside the space, or a point set not contained in its space.
struct InvalidPointError : Error {
    using Error::Error;
};

/// Structurally invalid input (bad sizes, non-partition blocks, mismatched spaces, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// Operation requires a symmetric (undirected) space.
struct NotSymmetricError : Error {
    using Error::Error;
};

/// A named family of sets whose union is not the whole space.
struct NotACoverError : Error {
    using Error::Error;
};

/// {A,B} is a cover but not an interior cover, so the exactness machinery does not apply.
struct CoverNotInteriorError : Error {
    using Error::Error;
};

/// A simplex of the ambient complex lies in neither cover set.
struct SimplexEscapeError : Error {
    using Error::Error;
};

/// Simplex budget exhausted before a required dimension was fully enumerated.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// File / JSON problems (used by the I/O layer and the CLI).
struct IoError : Error {
    using Error::Error;
};

} // namespace cech
