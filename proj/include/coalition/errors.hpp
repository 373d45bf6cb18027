#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coalition {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was asked for outside its domain: isolated vertex where a
// total-domination quantity is required, graph over the size cap, full
// vertex in a construction that forbids one, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `offset` is the byte position when known.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& msg, std::size_t offset = npos)
      : Error(offset == npos ? msg : msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A list of vertex sets that is not a partition of the graph's vertex set.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A violated internal invariant. Seeing one of these means either a bug or a
// genuine mathematical surprise; the message names the offending graph.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coalition
