#pragma once

// Seeded random permutations and the fixed corpus shared by the unit tests,
// the acceptance suite and the CLI round-trip checks.

#include <random>
#include <vector>

#include "tperm/perm.hpp"

namespace tperm::check {

using Rng = std::mt19937_64;

/// k = 0: a shuffled window of length <= extent at a random offset, shift
/// in [-2, 2]. k >= 2: a window whose values stay within extent of their
/// position.
Perm random_perm(Rng& rng, int k, Int extent = 6);

/// Like random_perm but with shift 0.
Perm random_shift0(Rng& rng, int k, Int extent = 6);

/// Cycles through k = 0, 2, 3.
int period_for(std::size_t instance);

/// Shift-0 elements of period k with inv <= max_inv, by breadth-first
/// search over right multiplication by generators. For k = 0 the letters
/// are restricted to [0, letters).
std::vector<Perm> shift0_ball(int k, Int max_inv, Int letters = 4);

/// Hand-picked permutations plus a seeded random sample.
std::vector<Perm> corpus();

}  // namespace tperm::check
