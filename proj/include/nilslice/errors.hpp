#ifndef NILSLICE_ERRORS_HPP
#define NILSLICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilslice {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OddCoefficient : Error {
    int index;
    explicit OddCoefficient(int idx)
        : Error("nonzero odd-degree coefficient at index " + std::to_string(idx)), index(idx) {}
};

struct NonConvergence : Error {
    using Error::Error;
};

struct InvalidRoot : Error {
    using Error::Error;
};
struct KindMismatch : Error {
    using Error::Error;
};
struct NotMember : Error {
    using Error::Error;
};
struct NotAntisymmetric : Error {
    using Error::Error;
};
struct OddDimension : Error {
    using Error::Error;
};
struct InvalidIndex : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct NonDiagonalH : Error {
    using Error::Error;
};
struct OddWeight : Error {
    using Error::Error;
};
struct ParityViolation : Error {
    using Error::Error;
};
struct InconsistentSign : Error {
    using Error::Error;
};
struct ReductionFailure : Error {
    using Error::Error;
};
struct RepeatedSupport : Error {
    using Error::Error;
};
struct WrongKind : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct NotInSlice : Error {
    using Error::Error;
};

}  // namespace nilslice

#endif
