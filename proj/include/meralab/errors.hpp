#pragma once

#include <stdexcept>
#include <string>

namespace meralab {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct ContractError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

}  // namespace meralab
