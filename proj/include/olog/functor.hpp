#pragma once

#include <cstddef>
#include <vector>

#include "olog/schema.hpp"

namespace olog {

// Structure-preserving map between schemas, sending boxes to boxes and
// arrows to arrows.
struct SchemaFunctor {
  OlogSchema source;
  OlogSchema target;
  IdMap<BoxId> box_map;
  IdMap<ArrowId> arrow_map;

  static SchemaFunctor identity(const OlogSchema& s);

  // Image of a source path; nullopt if some box or arrow is unmapped.
  std::optional<Path> map_path(const Path& p) const;
};

// Errors for unmapped or dangling images and endpoint violations; a warning
// EQ_IMAGE_UNKNOWN for each source equation whose image could not be
// derived in the target within max_steps rewrites.
std::vector<Diagnostic> check_functor(const SchemaFunctor& f, std::size_t max_steps);

}  // namespace olog
