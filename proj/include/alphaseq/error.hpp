#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alphaseq {

enum class ErrorCode {
  InvalidElement,
  Parse,
  PrefixAmbiguity,
  IndexOutOfRange,
  Undefined,
  InvalidN,
  NotSplittable,
  NotConjugatable,
  Maximal,
  Minimal,
  NoCandidate,
  NotInLn,
  NoDecomposition,
  InvalidSeed,
  CapExceeded,
  NotMember,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidElement: return "invalid element";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::PrefixAmbiguity: return "prefix ambiguity";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::Undefined: return "undefined";
    case ErrorCode::InvalidN: return "invalid n";
    case ErrorCode::NotSplittable: return "cell not splittable";
    case ErrorCode::NotConjugatable: return "cell not conjugatable";
    case ErrorCode::Maximal: return "maximal element";
    case ErrorCode::Minimal: return "minimal element";
    case ErrorCode::NoCandidate: return "no candidate";
    case ErrorCode::NotInLn: return "not a member of L_n";
    case ErrorCode::NoDecomposition: return "no decomposition";
    case ErrorCode::InvalidSeed: return "invalid seed";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::NotMember: return "not a member";
  }
  return "unknown";
}

/// Domain error raised by every operation in the library. The message always
/// starts with the text of the code, so callers can match on either.
class Error : public std::runtime_error {
 public:
  explicit Error(ErrorCode code, std::string_view detail = {})
      : std::runtime_error(make_message(code, detail)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  static std::string make_message(ErrorCode code, std::string_view detail) {
    std::string msg{to_string(code)};
    if (!detail.empty()) {
      msg += ": ";
      msg += detail;
    }
    return msg;
  }

  ErrorCode code_;
};

}  // namespace alphaseq
