#ifndef AVCKIT_ERRORS_HPP
#define AVCKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace avckit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NonStochasticRow : Error {
    using Error::Error;
};
struct NegativeEntry : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct ZeroMassInput : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct SymbolOutOfRange : Error {
    using Error::Error;
};
struct ExplosionGuard : Error {
    using Error::Error;
};
struct NonIntegralType : Error {
    using Error::Error;
};
struct NonIntegralCell : Error {
    using Error::Error;
};
struct SizeOverflow : Error {
    using Error::Error;
};
struct NotBinaryOutput : Error {
    using Error::Error;
};
struct InsufficientHeadroom : Error {
    using Error::Error;
};
struct NoFeasiblePoint : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace avckit

#endif
