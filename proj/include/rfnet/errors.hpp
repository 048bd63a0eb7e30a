#pragma once

#include <stdexcept>
#include <string>

namespace rfnet {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad frequency grid (empty, non-increasing, non-positive) or grid mismatch
// between networks being combined.
class GridError : public Error {
public:
    using Error::Error;
};

// Singular or near-singular matrix in a representation change
// (S<->ABCD with |S21| ~ 0, S->Y with singular I+S, ...).
class ConversionError : public Error {
public:
    using Error::Error;
};

// Port self-connection whose reduction denominator collapses
// (two ideal opens tied together and the like).
class JunctionError : public Error {
public:
    using Error::Error;
};

// Touchstone read/write problem. Carries a 1-based line number when the
// problem is tied to a specific input line (0 otherwise).
class TouchstoneError : public Error {
public:
    TouchstoneError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Input outside a model's validity window (microstrip w/h range etc.).
class ValidityError : public Error {
public:
    using Error::Error;
};

// Root search for a line width failed to bracket the target impedance.
class SynthesisError : public Error {
public:
    using Error::Error;
};

// Polarization state undefined (both excitation amplitudes exactly zero).
class PolarizationError : public Error {
public:
    using Error::Error;
};

// Netlist text problem. Same line-number convention as TouchstoneError.
class NetlistError : public Error {
public:
    NetlistError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Inconsistent system wiring (port used twice, port left dangling).
class WiringError : public Error {
public:
    using Error::Error;
};

} // namespace rfnet
