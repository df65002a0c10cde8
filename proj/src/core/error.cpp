#include "core/error.hpp"

namespace excross {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDocument: return "BadDocument";
    case ErrorKind::BadLabels: return "BadLabels";
    case ErrorKind::NonLatinSquare: return "NonLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BaseSizeMismatch: return "BaseSizeMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NonAssociativeL: return "NonAssociativeL";
    case ErrorKind::ProductEscapesIdeal: return "ProductEscapesIdeal";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotSquare: return "NotSquare";
  }
  return "Unknown";
}

}  // namespace excross
