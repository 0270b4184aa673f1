#pragma once

#include <stdexcept>

namespace netform {

// Bad arguments surface as std::invalid_argument / std::out_of_range. The two
// types below mark failures that callers usually want to tell apart.

/// Malformed edge-list or configuration text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request beyond a hard size limit (graph nodes, oracle enumeration).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netform
