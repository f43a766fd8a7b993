#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subtrees {

enum class ErrorKind {
  MalformedInput,
  NotATree,
  LabelOutOfRange,
  Degenerate,
  NotALeaf,
  TooClose,
  TooLarge,
  BadAnchor,
  SideTooSmall,
  NoPathChild,
  CenterViolation,
  BadParams,
  NoFormula,
  UnknownTag,
  Precondition,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::TooClose: return "TooClose";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadAnchor: return "BadAnchor";
    case ErrorKind::SideTooSmall: return "SideTooSmall";
    case ErrorKind::NoPathChild: return "NoPathChild";
    case ErrorKind::CenterViolation: return "CenterViolation";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NoFormula: return "NoFormula";
    case ErrorKind::UnknownTag: return "UnknownTag";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and meant for
/// programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subtrees
