#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gstp {

enum class ErrorKind {
  invalid_argument,
  syntax,
  unknown_vertex,
  disconnected,
  non_positive_cost,
  invalid_structure,  // self-loop, parallel edge, empty/duplicate group member
  overflow,
  capacity,
  non_leaf_dummy,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind is the stable part;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line in the input, 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised by extraction when a dummy vertex is not a leaf of the tree.
class NonLeafDummyError : public Error {
 public:
  NonLeafDummyError(std::size_t dummy_vertex, std::size_t degree)
      : Error(ErrorKind::non_leaf_dummy,
              "dummy vertex " + std::to_string(dummy_vertex) + " has degree " +
                  std::to_string(degree) + " in the tree"),
        dummy_vertex_(dummy_vertex) {}

  std::size_t dummy_vertex() const noexcept { return dummy_vertex_; }

 private:
  std::size_t dummy_vertex_;
};

}  // namespace gstp
