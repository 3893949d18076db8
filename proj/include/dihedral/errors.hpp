#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

  //! Thrown when an argument lies outside the documented domain, for
  //! example m < 3 or operands built for different moduli.
  class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown when a brute-force routine is asked to run beyond its size bound.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when an internal arithmetic identity fails (never expected).
  class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace dihedral
