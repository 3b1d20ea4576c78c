#pragma once

#include <stdexcept>
#include <string>

namespace tubekin {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// geometry
class NonUnitTangent : public Error {
public:
    explicit NonUnitTangent(const std::string& msg) : Error(msg) {}
};
class DegenerateEllipse : public Error {
public:
    explicit DegenerateEllipse(const std::string& msg) : Error(msg) {}
};

// rod
class RigidTube : public Error {
public:
    explicit RigidTube(const std::string& msg) : Error(msg) {}
};
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// channel
class OutsideChannel : public Error {
public:
    explicit OutsideChannel(const std::string& msg) : Error(msg) {}
};
class FilletTooSmall : public Error {
public:
    explicit FilletTooSmall(const std::string& msg) : Error(msg) {}
};

// solvers
class NonPsdConstraint : public Error {
public:
    explicit NonPsdConstraint(const std::string& msg) : Error(msg) {}
};
class InfeasibleQp : public Error {
public:
    explicit InfeasibleQp(const std::string& msg) : Error(msg) {}
};

// metrics
class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};
class DegenerateGeometry : public Error {
public:
    explicit DegenerateGeometry(const std::string& msg) : Error(msg) {}
};

// configuration; carries the offending field path for diagnostics
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& msg)
        : Error(field.empty() ? msg : field + ": " + msg), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace tubekin
