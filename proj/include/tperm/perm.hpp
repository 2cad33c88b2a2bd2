#pragma once

// Permutations of Z in two finitely presented families:
//
//   period 0      almost-sign-preserving permutations that agree with
//                 iota_chi (n -> n - chi) outside a finite window;
//   period k >= 2 extended k-affine permutations, alpha(n + k) = alpha(n) + k,
//                 stored by their window alpha(0), ..., alpha(k - 1).
//
// Every Perm is canonical, so structural equality is mathematical equality
// and Perm can key ordered containers.

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "tperm/error.hpp"
#include "tperm/intmath.hpp"

namespace tperm {

class Perm {
 public:
  /// Identity of period 0.
  Perm() = default;

  int period() const noexcept { return period_; }
  bool is_affine() const noexcept { return period_ >= 2; }

  /// The shift chi (degree minus genus for transmission permutations).
  Int shift() const noexcept { return chi_; }

  /// Positions [window_begin, window_end) carry the stored values. For
  /// period k >= 2 this is [0, k); for period 0 the canonical trimmed
  /// window outside of which the permutation is n -> n - shift.
  Int window_begin() const noexcept { return lo_; }
  Int window_end() const noexcept { return lo_ + static_cast<Int>(vals_.size()); }
  const std::vector<Int>& window() const noexcept { return vals_; }

  Int operator()(Int n) const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  Perm(int period, Int chi, Int lo, std::vector<Int> vals)
      : period_(period), chi_(chi), lo_(lo), vals_(std::move(vals)) {}

  friend Perm make_affine(int k, std::vector<Int> window);
  friend Perm make_finitary(Int chi, Int lo, std::vector<Int> vals);

  int period_ = 0;
  Int chi_ = 0;
  Int lo_ = 0;
  std::vector<Int> vals_;
};

/// Canonical representative of a k-equivalence class of inversions:
/// first < second, alpha(first) > alpha(second); second in [0, k) when k >= 2.
struct InversionClass {
  Int first = 0;
  Int second = 0;

  friend bool operator==(const InversionClass&, const InversionClass&) = default;
  friend auto operator<=>(const InversionClass&, const InversionClass&) = default;
};

using Cell = std::pair<Int, Int>;

/// Throws BadPeriod unless k == 0 or k >= 2.
void check_period(int k);

Perm make_affine(int k, std::vector<Int> window);
Perm make_finitary(Int chi, Int lo, std::vector<Int> vals);

Perm identity(int k);
/// iota_n : m -> m - n, shift n.
Perm iota(Int n, int k);
/// Exchanges n and n + 1 for every n == m (mod k); for k = 0 only m, m + 1.
Perm sigma(Int m, int k);

inline Int apply(const Perm& p, Int n) { return p(n); }
Int apply_inverse(const Perm& p, Int n);
Perm inverse(const Perm& p);

/// (a b)(n) = a(b(n)).
Perm compose(const Perm& a, const Perm& b);

inline Int shift(const Perm& p) { return p.shift(); }

/// #{n >= 0 : p(n) < 0} - #{n < 0 : p(n) >= 0}, evaluated by direct count.
Int shift_by_counting(const Perm& p);

/// max_n |p(n) - n|.
Int displacement(const Perm& p);

/// s_p(a, b) = #{n >= b : p(n) < a}.
Int slipface(const Perm& p, Int a, Int b);

std::vector<InversionClass> inversion_classes(const Perm& p);
Int inv_count(const Perm& p);

/// Ess(p), one representative per translation class (b in [0, k)) when k >= 2.
std::vector<Cell> essential_set(const Perm& p);

/// Bruhat order by the essential-set criterion. Both operands must share
/// period and shift.
bool bruhat_leq(const Perm& a, const Perm& b);

/// m with p(m) > p(m + 1), reduced mod k when k >= 2; sorted ascending.
std::vector<Int> descents_right(const Perm& p);
/// m with p^{-1}(m) > p^{-1}(m + 1); sorted ascending.
std::vector<Int> descents_left(const Perm& p);

/// Re-expresses p as an element of period k2 when p satisfies
/// p(n + k2) = p(n) + k2; nullopt otherwise.
std::optional<Perm> as_period(const Perm& p, int k2);

}  // namespace tperm
