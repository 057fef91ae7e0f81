#pragma once

#include <string_view>

#include "olog/schema.hpp"

namespace olog {

// Text of the bundled paper.olog, embedded at build time.
std::string_view bundled_schema_text();

// Parsed once; throws PARSE_ERROR if the embedded text is broken.
const OlogSchema& bundled_schema();

}  // namespace olog
