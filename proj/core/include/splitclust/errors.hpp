#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitclust {

// Malformed input text (ccg, clu, ktx, mcvs, mcsol). Carries the 1-based line
// number of the offending line, or 0 when the problem is not tied to a line.
class format_error : public std::runtime_error {
public:
    format_error(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A search hit one of its configured caps (vertex count, node limit).
// Deliberately not a "no" answer.
class resource_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace splitclust
