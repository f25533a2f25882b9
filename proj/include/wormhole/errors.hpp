#pragma once

#include <stdexcept>
#include <string>

namespace wormhole {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidShape : Error {
    using Error::Error;
};

struct SingularPoint : Error {
    explicit SingularPoint(double l)
        : Error("metric factor b^2+l^2 vanishes at l=" + std::to_string(l)), l(l) {}
    double l;
};

struct EmptyInterval : Error {
    using Error::Error;
};

struct DegenerateProfile : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct NonFinitePotential : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct InsufficientScan : Error {
    using Error::Error;
};

} // namespace wormhole
