#ifndef KALTRACK_COMMON_HPP
#define KALTRACK_COMMON_HPP

#include <stdexcept>
#include <string>

namespace kaltrack {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Pivot below threshold during LU factorization.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// An iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A matrix required to be Hurwitz-stable is not.
class InstabilityError : public Error {
public:
    using Error::Error;
};

/// Gain vector has (numerically) vanishing last entry.
class DegenerateGainError : public Error {
public:
    using Error::Error;
};

/// Scalar minimization could not bracket a minimum.
class BracketError : public Error {
public:
    using Error::Error;
};

/// Generated signal violates its smoothness-class bound.
class ClassViolationError : public Error {
public:
    using Error::Error;
};

/// Sequence length does not match the configured sample count.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

/// Invalid argument (out-of-range order, bad configuration, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries a 1-based line number.
class CsvError : public Error {
public:
    CsvError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Central table of numeric tolerances. All entries are defaults and can be
/// overridden per call by passing a modified copy.
struct Tolerances {
    double lu_pivot_min = 1e-12;       // LU pivot magnitude below which the matrix is singular
    int eigen_sweep_factor = 100;      // QR iteration cap = factor * dim * dim
    double lyapunov_residual = 1e-9;   // relative to max|W|
    double stability_margin = 1e-10;   // require Re(lambda) < -margin for Lyapunov solves
    double riccati_residual = 1e-10;   // Newton iteration stop
    int riccati_max_iter = 100;
    double certify_margin = 1e-9;      // stability verdict threshold on max Re(lambda)
    double distinct_gap_rel = 1e-8;    // min eigenvalue gap, relative to spectral radius
    double bracket_rel_width = 1e-8;   // golden-section stop, relative to gamma
    double gain_degenerate = 1e-12;    // |q_k| below this is a degenerate gain
    double class_check_slack = 1e-9;   // relative slack on the Lipschitz grid check
};

} // namespace kaltrack

#endif // KALTRACK_COMMON_HPP
