#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlag {

// A polynomial was expected to be divisible by a power of a variable but is not.
class NotDivisibleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Reciprocal, division or exp was requested on a series whose constant term
// is not (respectively) a unit / zero.
class NonUnitError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A coefficient or entry beyond the available truncation order was requested.
class TruncationError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class FlavorMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace rlag
