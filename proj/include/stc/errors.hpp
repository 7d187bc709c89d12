#pragma once

#include <stdexcept>
#include <string>

namespace stc {

// Malformed or inconsistent input: unknown labels, self-loops, duplicate
// edges, labelings that do not partition the edge set.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A solver was forced on a graph outside the class it handles.
class wrong_class_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Instance too large for the exact oracle and outside every polynomial class.
class unsupported_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A caller broke a precondition that the library cannot repair, or an
// internal consistency check failed.
class contract_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace stc
