#pragma once

#include <stdexcept>
#include <string>

namespace homcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (rationals, JSON files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class MorphismViolation : public Error {
 public:
  using Error::Error;
};

class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class ImageOutsideCodomain : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class ArityLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace homcoh
