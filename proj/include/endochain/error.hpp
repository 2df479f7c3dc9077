#ifndef ENDOCHAIN_ERROR_HPP_
#define ENDOCHAIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace endochain {

  enum class ErrorKind {
    NotMonotone,
    OutOfRange,
    LengthMismatch,
    SizeMismatch,
    ParseError,
    SumMismatch,
    RangeError,
    NotDecomposable,
    NotBasic,
    NotSubset,
    NotClosed,
    DomainError,
    UnsupportedSize,
    UnknownClaim
  };

  inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::NotMonotone: return "NotMonotone";
      case ErrorKind::OutOfRange: return "OutOfRange";
      case ErrorKind::LengthMismatch: return "LengthMismatch";
      case ErrorKind::SizeMismatch: return "SizeMismatch";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::SumMismatch: return "SumMismatch";
      case ErrorKind::RangeError: return "RangeError";
      case ErrorKind::NotDecomposable: return "NotDecomposable";
      case ErrorKind::NotBasic: return "NotBasic";
      case ErrorKind::NotSubset: return "NotSubset";
      case ErrorKind::NotClosed: return "NotClosed";
      case ErrorKind::DomainError: return "DomainError";
      case ErrorKind::UnsupportedSize: return "UnsupportedSize";
      case ErrorKind::UnknownClaim: return "UnknownClaim";
    }
    return "Unknown";
  }

  //! The single exception type thrown by the library. The kind is stable and
  //! is what callers (and tests) should switch on; the message is for humans.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace endochain

#endif  // ENDOCHAIN_ERROR_HPP_
