#pragma once

#include "bipoly.hpp"

namespace sextic::detail {

// Local intersection number at the origin by Fulton's reduction; throws
// InfiniteIntersection on a common component through the origin.
int fulton(const Field& K, BiPoly F, BiPoly G);

}  // namespace sextic::detail
