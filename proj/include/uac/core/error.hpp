#pragma once

#include <stdexcept>
#include <string>

namespace uac {

enum class ErrorKind {
  kDatumMismatch,
  kInfiniteGroup,
  kUndecidedOrder,
  kPrecondition,
  kIncompleteLattice,
  kUnsupportedRegime,
  kInternalConsistency,
  kTableRejected,
  kNotCurated,
  kIndeterminate,
  kBudget,
  kUsage,
  kParse,
  kStructural,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can map it to a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uac
