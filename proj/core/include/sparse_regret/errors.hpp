#pragma once

#include <stdexcept>
#include <string>

namespace sparse_regret {

// Raised when an iterative solver fails to converge or an update
// produces non-finite values. Never swallowed internally.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sparse_regret
