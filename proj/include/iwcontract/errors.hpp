#ifndef IWCONTRACT_ERRORS_HPP
#define IWCONTRACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwcontract {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFamily : Error { using Error::Error; };
struct UnsupportedRank : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct UniverseMismatch : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };
struct MissingCoordinate : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };
struct ZeroParameter : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };

/// Raised when an internal consistency assertion fails; indicates a
/// construction bug, never bad user input.
struct InternalError : Error { using Error::Error; };

} // namespace iwcontract

#endif
