#pragma once

#include <stdexcept>
#include <string>

namespace wavemem
{

// Raised when an integrator detects NaN/overflow or a broken conservation
// law. Carries the propagation coordinate at which the failure was seen.
class NumericalError : public std::runtime_error
{
public:
    NumericalError(const std::string &what, double z)
        : std::runtime_error(what + " (at z = " + std::to_string(z) + ")"), z_(z)
    {
    }

    double where() const { return z_; }

private:
    double z_;
};

} // namespace wavemem
