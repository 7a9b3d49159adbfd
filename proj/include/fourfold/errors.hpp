#pragma once

#include <stdexcept>
#include <string>

namespace fourfold {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by the admissibility gate for a = 0 or vanishing discriminant.
struct DegenerateQuartic : Error {
    using Error::Error;
};
// Search space exhausted without an admissible quartic.
struct NotFound : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
// Multiplication-by-u matrix is singular with u != 0: the algebra is not a
// field, i.e. the Galois group is smaller than expected.
struct SingularMultiplication : Error {
    using Error::Error;
};
// Element is not fixed by conjugation, so it has no certified real sign.
struct NotReal : Error {
    using Error::Error;
};
// Element is moved by the stabilizer of vertex 1, hence not in the subfield F.
struct NotInF : Error {
    using Error::Error;
};
struct NoConsistentLabeling : Error {
    using Error::Error;
};
struct IncompatibleSeed : Error {
    using Error::Error;
};
struct NotPure02 : Error {
    using Error::Error;
};
struct RankMismatch : Error {
    using Error::Error;
};
struct SingularTransform : Error {
    using Error::Error;
};
struct DegenerateH3 : Error {
    using Error::Error;
};
struct UnknownClaim : Error {
    using Error::Error;
};
struct ContextMissing : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace fourfold
