#pragma once

#include <stdexcept>
#include <string>

namespace mintest {

/// Malformed matrix text, unknown labels, invalid configuration.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested exhaustive computation exceeds its configured column ceiling.
class CeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mintest
