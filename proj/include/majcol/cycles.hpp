#pragma once

#include <cstddef>

#include "majcol/graph.hpp"

namespace majcol {

inline constexpr std::size_t kMaxShortCycleLength = 12;

/// Number of vertices that lie on at least one directed cycle of length <= L.
/// Throws std::invalid_argument for L > kMaxShortCycleLength.
std::size_t count_cycles_upto(const Digraph& d, std::size_t L);

}  // namespace majcol
