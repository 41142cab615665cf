#pragma once

#include <stdexcept>
#include <string>

namespace superq {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rank parameters outside the supported range of a family.
class UnsupportedRankError : public Error {
public:
    using Error::Error;
};

/// D(2,1;a) with a in {0, -1}.
class InvalidAlphaError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class InconsistentRealFormError : public Error {
public:
    using Error::Error;
};

/// Positivity functional annihilates some root.
class DegenerateFunctionalError : public Error {
public:
    using Error::Error;
};

/// A cell cone whose extreme ray count differs from its dimension.
class NotSimplicialError : public Error {
public:
    using Error::Error;
};

/// Exponent of an exponential-affine term left the guarded range.
class ExponentOverflowError : public Error {
public:
    using Error::Error;
};

/// Computed rho disagrees with the expected coordinate shift pattern.
class RhoMismatchError : public Error {
public:
    using Error::Error;
};

/// Configuration file problems; carries the offending line when known.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace superq
