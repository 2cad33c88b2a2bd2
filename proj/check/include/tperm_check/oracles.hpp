#pragma once

// Slow, independent re-derivations used to cross-check the library.
// Nothing here calls the code path it checks.

#include <optional>
#include <span>
#include <vector>

#include "tperm/demazure.hpp"
#include "tperm/words.hpp"

namespace tperm::check {

/// #{n >= b : p(n) < a} by scanning n upward until p(n) >= a is forced.
Int slipface_by_scan(const Perm& p, Int a, Int b);

/// max(a - b + n, 0) + [a + n == b == m + 1 (mod k)], equality when k = 0.
Int iota_sigma_slipface(Int n, Int m, int k, Int a, Int b);

/// s_a <= s_b at every point of the box.
bool bruhat_leq_pointwise(const Perm& a, const Perm& b, const Box& box);

/// Every length-g word over {identity} and the letters that can occur,
/// evaluated with the Demazure product.
Count hecke_count_naive(const Perm& p, Int g);

/// Reduced tuples found by searching factor candidates conjugated out of
/// the Bruhat lower set of the shift-normalized target, keeping the
/// length-additive tuples whose product is the target.
std::vector<ShiftedTuple> reduced_tuples_bruteforce(const Perm& target, std::span<const Int> shifts,
                                                    std::optional<Int> cap = std::nullopt);

/// Every residual permutation rho making rho + 1 + k pi bigrassmannian.
std::vector<std::vector<Int>> bigrassmannian_rhos(const std::vector<Int>& pi);

}  // namespace tperm::check
