#pragma once

#include <stdexcept>
#include <string>

namespace davenport {

// Input outside an operation's domain (zero inverse, k not dividing p-1, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource budget (enumeration size, nodes, time) was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result that the mathematics guarantees failed to materialize.
// Seeing one of these means the implementation is wrong.
class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace davenport
