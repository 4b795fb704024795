#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace andrasfai {

// Bad numeric parameter (k = 0, k below a theorem gate, reversed ranges).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally invalid input: non-negation-closed sets, asymmetric rows or
// matrices, malformed serialized data.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double residual, std::size_t sweeps)
        : std::runtime_error("Jacobi iteration did not converge after " + std::to_string(sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(residual) + ")"),
          residual_(residual),
          sweeps_(sweeps) {}

    double residual() const noexcept { return residual_; }
    std::size_t sweeps() const noexcept { return sweeps_; }

private:
    double residual_;
    std::size_t sweeps_;
};

}  // namespace andrasfai
