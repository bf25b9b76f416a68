#pragma once

#include <stdexcept>

namespace nahopf {

/// A computation produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nahopf
