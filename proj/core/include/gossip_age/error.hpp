#pragma once

#include <stdexcept>
#include <string>

namespace gossip_age {

// Raised when a request is well-formed but exceeds an enumeration or memory
// cap (exact solver order, brute-force expansion order, ...).
class InfeasibleSize : public std::runtime_error {
 public:
  explicit InfeasibleSize(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the edge-list reader on malformed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gossip_age
