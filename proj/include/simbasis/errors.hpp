#pragma once

#include <stdexcept>
#include <string>

namespace simbasis {

// Malformed or invalid user input (bad rationals, duplicate points, unknown
// labels, dependent configurations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate geometric input to a predicate that has no defined answer, e.g.
// a segment lying inside the hyperplane it is intersected with.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace simbasis
