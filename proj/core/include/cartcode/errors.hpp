#ifndef CARTCODE_ERRORS_HPP
#define CARTCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cartcode {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct NotASubfieldSize : Error { using Error::Error; };
struct ExponentOutOfRange : Error { using Error::Error; };
struct NotNested : Error { using Error::Error; };
struct EmptyBlock : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct InvalidTransform : Error { using Error::Error; };
struct BadOmegaSize : Error { using Error::Error; };
struct OmegaNotInSubfield : Error { using Error::Error; };
struct KOutOfRange : Error { using Error::Error; };
struct SizeOutOfRange : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace cartcode

#endif // CARTCODE_ERRORS_HPP
