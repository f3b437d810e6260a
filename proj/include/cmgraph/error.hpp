#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmg {

enum class ErrorCode {
  IndexOrder,  // a generating pair (i,j) with i > j
  Range,       // index or size outside its domain
  NotPoset,    // relation is not a partial order
  Level,       // composite level range a..b invalid
  Chain,       // tuple of ideals is not a valid chain
  Degree,      // generators are not equigenerated
  Budget,      // search state cap exceeded
  Unit,        // unit ideal where a proper ideal is required
  Size,        // enumeration budget exceeded
  Parts,       // malformed bipartite input
  Overflow,    // arithmetic overflow
  NotFace,     // argument is not a face of the complex
  Parse,       // malformed text input
  Internal,    // two routes that must agree did not
};

inline std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::IndexOrder: return "E_INDEX_ORDER";
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::NotPoset: return "E_NOT_POSET";
    case ErrorCode::Level: return "E_LEVEL";
    case ErrorCode::Chain: return "E_CHAIN";
    case ErrorCode::Degree: return "E_DEGREE";
    case ErrorCode::Budget: return "E_BUDGET";
    case ErrorCode::Unit: return "E_UNIT";
    case ErrorCode::Size: return "E_SIZE";
    case ErrorCode::Parts: return "E_PARTS";
    case ErrorCode::Overflow: return "E_OVERFLOW";
    case ErrorCode::NotFace: return "E_NOT_FACE";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cmg
