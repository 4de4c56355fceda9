#include "uac/core/error.hpp"

namespace uac {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDatumMismatch: return "datum-mismatch";
    case ErrorKind::kInfiniteGroup: return "infinite-group";
    case ErrorKind::kUndecidedOrder: return "undecided-order";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kIncompleteLattice: return "incomplete-lattice";
    case ErrorKind::kUnsupportedRegime: return "unsupported-regime";
    case ErrorKind::kInternalConsistency: return "internal-consistency";
    case ErrorKind::kTableRejected: return "table-rejected";
    case ErrorKind::kNotCurated: return "not-curated";
    case ErrorKind::kIndeterminate: return "indeterminate";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kStructural: return "structural";
  }
  return "unknown";
}

}  // namespace uac
