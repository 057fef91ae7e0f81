#include "olog/bundled.hpp"

#include "olog/dsl.hpp"

namespace olog {

namespace detail {
extern const std::string_view kBundledSchema;
}

std::string_view bundled_schema_text() { return detail::kBundledSchema; }

const OlogSchema& bundled_schema() {
  static const OlogSchema schema = parse_schema(bundled_schema_text(), "paper.olog").schema;
  return schema;
}

}  // namespace olog
