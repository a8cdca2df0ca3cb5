#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace basechange {

enum class ErrorKind {
  InvalidInput,
  UnsupportedExtension,
  NotInPsiImage,
  MismatchedResidueData,
  NotUnramified,
  EvenDegree,
  OutOfScope,
  WindowTooSmall,
  InsufficientSamples,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::NotInPsiImage: return "NotInPsiImage";
    case ErrorKind::MismatchedResidueData: return "MismatchedResidueData";
    case ErrorKind::NotUnramified: return "NotUnramified";
    case ErrorKind::EvenDegree: return "EvenDegree";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace basechange
