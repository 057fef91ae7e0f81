#include "olog/error.hpp"

#include <algorithm>

namespace olog {

const std::vector<std::string_view>& codes::all() {
  static const std::vector<std::string_view> kAll = {
      kDuplicateId,       kEmptyLabel,        kDanglingArrow,
      kMalformedPath,     kUnknownBox,        kUnknownArrow,
      kEqEndpointMismatch, kFpNotSquare,      kFpSquareMissing,
      kEndpointMismatch,  kUnmappedBox,       kUnmappedArrow,
      kEndpointViolation, kEqImageUnknown,    kSchemaMismatch,
      kMissingImage,      kImageNotInTarget,  kExtraEntry,
      kPayloadMixed,      kElementNotInSource, kCospanMismatch,
      kNonfiniteInput,    kNonfiniteSmall,    kDomain,
      kNoLifeline,        kInvalidChain,      kInconsistentComparators,
      kParamConstraint,   kConjectureFailed,  kParseError,
      kIoError};
  return kAll;
}

std::string_view to_string(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  os << to_string(d.severity) << ' ' << d.code;
  if (!d.location.empty()) os << " at " << d.location;
  if (!d.message.empty()) os << ": " << d.message;
  return os;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

}  // namespace olog
