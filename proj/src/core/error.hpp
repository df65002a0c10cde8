#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace excross {

enum class ErrorKind {
  BadDocument,
  BadLabels,
  NonLatinSquare,
  NoIdentity,
  NonAssociative,
  IndexOutOfRange,
  BaseSizeMismatch,
  GroupMismatch,
  GroupTooLarge,
  BoundTooSmall,
  InvalidAction,
  DimensionMismatch,
  NotAnIdeal,
  NonAssociativeL,
  ProductEscapesIdeal,
  SourceMismatch,
  NotWellDefined,
  NotSquare,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the C boundary can
// map it onto a status code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace excross
