#ifndef FREECONS_ERRORS_HPP
#define FREECONS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freecons {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad config, bad word-spec, operands from different groups.
struct ConfigError : Error {
    using Error::Error;
};

// Requested operation is outside the supported subgroup/factor kinds.
struct UnsupportedError : Error {
    using Error::Error;
};

// Enumeration would exceed a configured cap.
struct CapError : Error {
    using Error::Error;
};

// The instance fails a structural precondition (degenerate amalgam,
// ascending HNN extension).
struct DegenerateError : Error {
    using Error::Error;
};

} // namespace freecons

#endif
