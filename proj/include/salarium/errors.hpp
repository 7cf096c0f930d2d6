#pragma once

#include <stdexcept>
#include <string>

namespace salarium {

// Invalid domain values (negative counts, qualification outside {1,2,3},
// expectancy outside [0,1], non-positive coefficients, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files; message carries file and field/position diagnostics.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Infeasible calibration problems: empty anchor sets, parameters that
// the given anchors cannot determine, unbracketable exponent targets.
class CalibrationError : public std::runtime_error {
public:
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace salarium
