#pragma once

#include <stdexcept>
#include <string>

namespace infoeff {

// Error taxonomy maps onto CLI exit codes:
//   ValidationError       -> 2  (bad flags, malformed input, contract violations)
//   InsufficientDataError -> 3  (inputs valid but too small/degenerate to proceed)
//   anything else         -> 4  (internal error)
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace infoeff
