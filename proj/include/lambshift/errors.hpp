// errors.hpp — exception hierarchy shared by every lambshift module

#pragma once

#include <stdexcept>
#include <string>

namespace lambshift {

// Broad category, used by the CLI to pick an exit code.
enum class ErrorKind { config, numeric, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Rejected input: bad parameters, dimensions, or configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class InvalidDimension : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class InvalidParams : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class NumericFailure : public Error {
public:
    explicit NumericFailure(const std::string& what, double residual = 0.0)
        : Error(ErrorKind::numeric, what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// A dressed state could not be assigned a bare label with enough overlap.
class AmbiguousLabel : public NumericFailure {
public:
    AmbiguousLabel(const std::string& what, int n_atom, int n_res, double overlap)
        : NumericFailure(what), n_atom_(n_atom), n_res_(n_res), overlap_(overlap) {}
    int n_atom() const noexcept { return n_atom_; }
    int n_res() const noexcept { return n_res_; }
    double overlap() const noexcept { return overlap_; }

private:
    int n_atom_;
    int n_res_;
    double overlap_;
};

class ResourceLimit : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

// Lower normal-mode frequency squared is not positive.
class Instability : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class Degeneracy : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

// A closed-form expression hit one of its poles (Δ = 0, Δ = λ, δω_a = 0).
class Resonance : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace lambshift
