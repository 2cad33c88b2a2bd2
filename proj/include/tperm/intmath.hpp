#pragma once

#include <cstdint>

namespace tperm {

using Int = std::int64_t;

constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

constexpr Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

static_assert(floor_div(-1, 2) == -1 && floor_div(3, 2) == 1);
static_assert(ceil_div(-1, 2) == 0 && ceil_div(3, 2) == 2);
static_assert(floor_mod(-1, 3) == 2);

}  // namespace tperm
