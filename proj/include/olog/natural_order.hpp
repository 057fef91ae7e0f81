#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace olog {

// Orders identifiers so that embedded digit runs compare numerically
// ("b2" < "b10", "9" < "42"). Ties fall back to plain byte order, which
// keeps the relation a strict weak ordering ("01" vs "1").
bool natural_less(std::string_view a, std::string_view b) noexcept;

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return natural_less(a, b);
  }
};

template <class V>
using IdMap = std::map<std::string, V, NaturalLess>;

using IdSet = std::set<std::string, NaturalLess>;

}  // namespace olog
