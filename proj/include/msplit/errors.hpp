#pragma once

#include <stdexcept>
#include <string>

namespace msplit {

/// Base class for all msplit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible order/dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A diagonal entry is non-positive, or a unit diagonal was required.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// An even-order root of a negative component was requested.
class NegativeRadicandError : public Error {
public:
    using Error::Error;
};

/// The E-part of a splitting has a singular majorization matrix.
class SingularEMatrixError : public Error {
public:
    using Error::Error;
};

/// A splitting variant was requested outside its domain (e.g. E5 with s != 1).
class VariantDomainError : public Error {
public:
    using Error::Error;
};

/// A nonnegative tensor was required.
class NotNonnegativeError : public Error {
public:
    using Error::Error;
};

/// A COO file listed the same index tuple twice.
class DuplicateEntryError : public Error {
public:
    using Error::Error;
};

/// A file did not match the expected schema.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Invalid benchmark/example configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace msplit
