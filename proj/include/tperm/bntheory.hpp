#pragma once

// Permutations attached to Brill-Noether loci (gamma^r_chi) and to
// splitting loci of degree-k covers (gamma_e), and the residual/periodic
// decomposition alpha(n) = rho(n) + 1 + k pi(n) used to read splitting types.

#include <vector>

#include "tperm/perm.hpp"

namespace tperm {

/// Nondecreasing k-tuple e_1 <= ... <= e_k, k >= 2.
class SplittingType {
 public:
  explicit SplittingType(std::vector<Int> entries);

  int k() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<Int> entries_;
};

/// rho is a permutation of {0, ..., k-1}; pi holds pi(0), ..., pi(k-1).
struct ResidualPeriodic {
  std::vector<Int> rho;
  std::vector<Int> pi;

  friend bool operator==(const ResidualPeriodic&, const ResidualPeriodic&) = default;
};

/// Requires r >= max(0, chi + 1).
Perm gamma_rd(Int r, Int chi);

/// u(e) = sum_{m,n} max(0, e_m - e_n - 1).
Int splitting_u(const SplittingType& e);
/// x_e(m) = sum_n max(e_n + 1 + m, 0).
Int splitting_x(const SplittingType& e, Int m);
/// d(e) = g - 1 + sum_n (e_n + 1).
Int splitting_d(const SplittingType& e, Int g);

ResidualPeriodic rho_pi_decompose(const Perm& p);
Perm recompose(const ResidualPeriodic& rp);

/// Increasing on {0, ..., k-1} with inverse increasing on {1, ..., k}.
bool is_bigrassmannian(const Perm& p);

/// sum_{m,n} max(0, pi(n) - pi(m) - 1). Every pair it counts is an
/// inversion, so this bounds inv_k(p) from below; equality holds exactly on
/// bigrassmannian permutations.
Int periodic_inversion_bound(const Perm& p);

/// The residual permutation making rho + 1 + k pi bigrassmannian for a
/// nondecreasing pi: indices of the largest pi value first, ascending, then
/// the next largest, and so on.
std::vector<Int> bigrassmannian_rho(const std::vector<Int>& pi);

Perm gamma_splitting(const SplittingType& e);
SplittingType splitting_type_of(const Perm& p);

}  // namespace tperm
