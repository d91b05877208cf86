#pragma once

#include <stdexcept>
#include <string>

namespace hzbound {

/// File could not be opened, read, or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input file with invalid content; the message names the offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// N fails the chi_p(NA) != -1 condition, so the curve family is empty.
struct EligibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace hzbound
