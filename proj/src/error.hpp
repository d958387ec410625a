// error.hpp -- exception hierarchy shared by all quiverhom modules.
#ifndef QUIVERHOM_ERROR_HPP
#define QUIVERHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quiverhom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two scalars or matrices from different field contexts were combined.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Dimension / shape disagreement in matrix or representation data.
struct ShapeError : Error {
  using Error::Error;
};

// Argument outside the operation's domain (foreign arrow, cyclic quiver
// where acyclic is required, non-prime modulus, ...).
struct DomainError : Error {
  using Error::Error;
};

// A truncation or enumeration bound is missing or provably insufficient.
struct BoundsError : Error {
  using Error::Error;
};

// Text input rejected; carries a 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

}  // namespace quiverhom

#endif
