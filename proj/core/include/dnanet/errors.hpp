#ifndef DNANET_ERRORS_HPP
#define DNANET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dnanet {

// Base of everything this library throws. kind() is the stable name the CLI
// prints in its machine-parsable error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define DNANET_ERROR_TYPE(NAME)                                              \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& message) : Error(#NAME, message) {} \
    }

DNANET_ERROR_TYPE(ParseError);        // malformed text input, message carries the position
DNANET_ERROR_TYPE(IoError);           // file open/read/write failure
DNANET_ERROR_TYPE(LengthError);       // sequence length breaks a divisibility contract
DNANET_ERROR_TYPE(BorderError);       // stuffing guard has a nontrivial border
DNANET_ERROR_TYPE(TruncationError);   // input ends in the middle of a framing unit
DNANET_ERROR_TYPE(ConfigError);       // malformed stack/enzyme/run configuration
DNANET_ERROR_TYPE(ChecksumError);
DNANET_ERROR_TYPE(MissingSegmentError);
DNANET_ERROR_TYPE(HeaderError);
DNANET_ERROR_TYPE(AddressError);
DNANET_ERROR_TYPE(UncorrectableError);
DNANET_ERROR_TYPE(StateError);
DNANET_ERROR_TYPE(RangeError);
DNANET_ERROR_TYPE(NoRouteError);
DNANET_ERROR_TYPE(ValidationError);
DNANET_ERROR_TYPE(NoValidChainError);
DNANET_ERROR_TYPE(ConfirmationConflictError);
DNANET_ERROR_TYPE(ExhaustedError);

#undef DNANET_ERROR_TYPE

}  // namespace dnanet

#endif  // DNANET_ERRORS_HPP
