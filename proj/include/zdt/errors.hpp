#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdt {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A game specification violates one of its bounds. The message names the bound.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

// A numeric argument is out of its documented domain (delta, phi, p0, episodes ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class SlopeAtOne : public Error {
public:
  SlopeAtOne() : Error("slope s = 1 makes the baseline bounds undefined (division by 1 - s)") {}
};

class SlopeOutOfRange : public Error {
public:
  using Error::Error;
};

class NotEnforceable : public Error {
public:
  using Error::Error;
};

class NoFeasibleSlope : public Error {
public:
  using Error::Error;
};

class StateSpaceTooLarge : public Error {
public:
  using Error::Error;
};

class NumericFailure : public Error {
public:
  using Error::Error;
};

// The requested (phi, p0, delta) put some strategy entries outside [0, 1].
class InfeasibleParameters : public Error {
public:
  InfeasibleParameters(std::string what, std::vector<std::pair<int, double>> entries)
      : Error(std::move(what)), entries_(std::move(entries)) {}

  // (index into the 2n-vector, offending value); index -1 denotes the initial probability.
  const std::vector<std::pair<int, double>>& entries() const { return entries_; }

private:
  std::vector<std::pair<int, double>> entries_;
};

}  // namespace zdt
