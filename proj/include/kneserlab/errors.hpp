#pragma once

#include <stdexcept>
#include <string>

namespace kneserlab {

// Base for all library errors. The CLI maps input/parameter problems and
// resource_error to exit code 2; failed verifications map to exit code 1.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A hard budget was exceeded. Never a wrong count: either the exact answer
// or this.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

}  // namespace kneserlab
