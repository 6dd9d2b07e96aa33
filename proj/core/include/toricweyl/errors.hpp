#ifndef TORICWEYL_ERRORS_HPP
#define TORICWEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toricweyl {

enum class ErrorCode {
  RankDeficient,
  DuplicateLabel,
  BadDimension,
  PositivityLost,
  OutsidePolytope,
  NoConvergence,
  NonAffineChange,
  TooLarge,
  NotInSpan,
  TooManyVertices,
  SingularBasis,
  NonIntegral,
  Mismatch,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception type; `code()` distinguishes the failure classes
/// named in the module contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace toricweyl

#endif
