#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace olog {

// Stable diagnostic and error codes. Every Diagnostic::code and
// OlogError::code() is one of these strings.
namespace codes {
// schema
inline constexpr std::string_view kDuplicateId = "DUPLICATE_ID";
inline constexpr std::string_view kEmptyLabel = "EMPTY_LABEL";
inline constexpr std::string_view kDanglingArrow = "DANGLING_ARROW";
inline constexpr std::string_view kMalformedPath = "MALFORMED_PATH";
inline constexpr std::string_view kUnknownBox = "UNKNOWN_BOX";
inline constexpr std::string_view kUnknownArrow = "UNKNOWN_ARROW";
inline constexpr std::string_view kEqEndpointMismatch = "EQ_ENDPOINT_MISMATCH";
inline constexpr std::string_view kFpNotSquare = "FP_NOT_SQUARE";
inline constexpr std::string_view kFpSquareMissing = "FP_SQUARE_MISSING";
inline constexpr std::string_view kEndpointMismatch = "ENDPOINT_MISMATCH";
// functors
inline constexpr std::string_view kUnmappedBox = "UNMAPPED_BOX";
inline constexpr std::string_view kUnmappedArrow = "UNMAPPED_ARROW";
inline constexpr std::string_view kEndpointViolation = "ENDPOINT_VIOLATION";
inline constexpr std::string_view kEqImageUnknown = "EQ_IMAGE_UNKNOWN";
// instances
inline constexpr std::string_view kSchemaMismatch = "SCHEMA_MISMATCH";
inline constexpr std::string_view kMissingImage = "MISSING_IMAGE";
inline constexpr std::string_view kImageNotInTarget = "IMAGE_NOT_IN_TARGET";
inline constexpr std::string_view kExtraEntry = "EXTRA_ENTRY";
inline constexpr std::string_view kPayloadMixed = "PAYLOAD_MIXED";
inline constexpr std::string_view kElementNotInSource = "ELEMENT_NOT_IN_SOURCE";
inline constexpr std::string_view kCospanMismatch = "COSPAN_MISMATCH";
// chain model
inline constexpr std::string_view kNonfiniteInput = "NONFINITE_INPUT";
inline constexpr std::string_view kNonfiniteSmall = "NONFINITE_r";
inline constexpr std::string_view kDomain = "DOMAIN";
inline constexpr std::string_view kNoLifeline = "NO_LIFELINE";
inline constexpr std::string_view kInvalidChain = "INVALID_CHAIN";
inline constexpr std::string_view kInconsistentComparators = "INCONSISTENT_COMPARATORS";
inline constexpr std::string_view kParamConstraint = "PARAM_CONSTRAINT";
inline constexpr std::string_view kConjectureFailed = "CONJECTURE_FAILED";
// text formats
inline constexpr std::string_view kParseError = "PARSE_ERROR";
inline constexpr std::string_view kIoError = "IO_ERROR";

// All codes above, for documentation and tests.
const std::vector<std::string_view>& all();
}  // namespace codes

enum class Severity { Error, Warning };

std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  // schema element id ("arrow 9", "eq 3", ...) or "file:line:col"
  std::string location;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

// Thrown by operations whose contract lists an error code.
class OlogError : public std::runtime_error {
 public:
  OlogError(std::string_view code, const std::string& message)
      : std::runtime_error(std::string(code) + ": " + message), code_(code) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace olog
