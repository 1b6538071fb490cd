#ifndef ORTHINV_ERRORS_HPP
#define ORTHINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact division failed.  When this escapes from a family constructor it
// means a divisibility claim was falsified, so callers must never swallow it.
class NonDivisibleError : public Error {
 public:
  NonDivisibleError(std::string dividend, std::string divisor)
      : Error("non-divisible: " + dividend + " by " + divisor),
        dividend(std::move(dividend)),
        divisor(std::move(divisor)) {}
  std::string dividend;
  std::string divisor;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what), pos(pos) {}
  std::size_t pos;
};

class MissingImageError : public Error {
 public:
  using Error::Error;
};

class WrongArityError : public Error {
 public:
  using Error::Error;
};

class ArityParityError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class NotMultilinearError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthinv

#endif
