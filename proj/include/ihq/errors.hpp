#pragma once

#include <stdexcept>
#include <string>

namespace ihq {

// Computation-level failure: inconsistent input data, non-regular shift levels,
// guard-band violations, arithmetic overflow. The CLI maps these to exit code 1.
class computation_error : public std::runtime_error {
public:
    explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: space specification files, class expressions, command lines.
// Messages cite the offending field path. The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ihq
