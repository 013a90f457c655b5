#pragma once

#include <stdexcept>

namespace localh {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };
struct EndpointIsRoot : Error { using Error::Error; };
struct NotInBasisSpan : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct UnsupportedXiZero : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct InvalidRank : Error { using Error::Error; };
struct NegativeOrder : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidDepth : Error { using Error::Error; };
struct UnknownSequence : Error { using Error::Error; };

}  // namespace localh
