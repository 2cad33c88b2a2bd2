#pragma once

// Demazure product of permutations of Z through min-plus multiplication of
// slipface functions,
//
//     s_{a * b}(x, y) = min_l { s_a(x, l) + s_b(l, y) },
//
// together with recovery of a permutation from a tabulated slipface,
// reducedness predicates, and a brute-force Bruhat-maximum oracle.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tperm/perm.hpp"

namespace tperm {

/// Inclusive ranges of slipface arguments: a in [a_lo, a_hi], b in [b_lo, b_hi].
struct Box {
  Int a_lo = 0;
  Int a_hi = 0;
  Int b_lo = 0;
  Int b_hi = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Values s(a, b) on a rectangular box, with the asymptotic shift chi and a
/// margin M such that s(a, b) = 0 for a - b <= -M and s(a, b) = chi + a - b
/// for a - b >= M.
class SlipfaceTable {
 public:
  SlipfaceTable(const Box& box, Int chi, Int margin);

  const Box& box() const noexcept { return box_; }
  Int chi() const noexcept { return chi_; }
  Int margin() const noexcept { return margin_; }
  Int rows() const noexcept { return box_.a_hi - box_.a_lo + 1; }
  Int cols() const noexcept { return box_.b_hi - box_.b_lo + 1; }

  bool contains(Int a, Int b) const noexcept {
    return a >= box_.a_lo && a <= box_.a_hi && b >= box_.b_lo && b <= box_.b_hi;
  }

  Int operator()(Int a, Int b) const { return values_[index(a, b)]; }
  Int& operator()(Int a, Int b) { return values_[index(a, b)]; }

  friend bool operator==(const SlipfaceTable&, const SlipfaceTable&) = default;

 private:
  std::size_t index(Int a, Int b) const {
    return static_cast<std::size_t>((a - box_.a_lo) * cols() + (b - box_.b_lo));
  }

  Box box_;
  Int chi_;
  Int margin_;
  std::vector<Int> values_;
};

inline constexpr std::size_t kDefaultOracleBound = 1'000'000;

SlipfaceTable tabulate(const Perm& p, const Box& box);

/// Columns one past the window on each side; rows a band of half-width
/// 2M + 2 around them, M = displacement(p).
Box default_box(const Perm& p);

/// Throws NotSubmodular or BadAsymptotics when the table violates the
/// submodularity or asymptotic criteria anywhere inside its box.
void validate_table(const SlipfaceTable& t);

/// Min-plus product over the shared middle index. Returns nullopt when some
/// minimum is attained on the boundary of the middle range, i.e. the range
/// is too narrow to certify the result.
std::optional<SlipfaceTable> min_plus(const SlipfaceTable& left, const SlipfaceTable& right);

/// The unique permutation of period k whose slipface matches the table.
Perm perm_from_slipface(const SlipfaceTable& t, int k);

Perm demazure(const Perm& a, const Perm& b);
Perm demazure_fold(std::span<const Perm> ps);

/// Ordinary left-to-right product ps[0] ps[1] ... ps[l-1].
Perm product(std::span<const Perm> ps);

/// a and b^{-1} share no inversion class.
bool is_reduced_pair(const Perm& a, const Perm& b);

/// Inv(a_1 ... a_l) is the disjoint union of the inversion sets of each a_n
/// pulled back through a_{n+1} ... a_l.
bool is_reduced_tuple(std::span<const Perm> ps);

/// inv(a_1 ... a_l) = sum inv(a_n).
bool is_length_additive(std::span<const Perm> ps);

/// {q : shift(q) = shift(p), q <= p}, sorted.
std::vector<Perm> bruhat_lower_set(const Perm& p, std::size_t bound = kDefaultOracleBound);

/// max{a1 b1 : a1 <= a, b1 <= b} by exhaustive enumeration.
Perm demazure_by_max_oracle(const Perm& a, const Perm& b,
                            std::size_t bound = kDefaultOracleBound);

}  // namespace tperm
