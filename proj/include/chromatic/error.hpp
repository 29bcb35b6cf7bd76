#pragma once

#include <stdexcept>
#include <string>

namespace chromatic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error { using Error::Error; };
class ClosureExceedsBound : public Error { using Error::Error; };
class UnknownSpec : public Error { using Error::Error; };
class ElementNotInGroup : public Error { using Error::Error; };
class NotPrime : public Error { using Error::Error; };
class EvenPrime : public Error { using Error::Error; };
class CensusTooLarge : public Error { using Error::Error; };
class InvalidEmbedding : public Error { using Error::Error; };
class HeightUndefined : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class InvalidArgument : public Error { using Error::Error; };

}  // namespace chromatic
