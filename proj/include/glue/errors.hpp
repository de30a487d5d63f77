#pragma once

#include <stdexcept>
#include <string>

namespace glue {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on the mathematical objects was violated (bad index,
// non-bijective map, expansion at a sink, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Input could not be parsed (JSON/path syntax).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// The filesystem refused a read or write.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// A configured cap (depth, term count, node budget) was exceeded.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

}  // namespace glue
