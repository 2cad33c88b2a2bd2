#include "tperm/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <string>

namespace tperm {

namespace {

std::string show_ints(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void require_same_period(const Perm& a, const Perm& b, const char* op) {
  if (a.period() != b.period()) {
    throw Error(ErrorKind::PeriodMismatch, std::string(op) + ": periods " +
                                               std::to_string(a.period()) + " and " +
                                               std::to_string(b.period()));
  }
}

}  // namespace

Int Perm::operator()(Int n) const noexcept {
  if (period_ >= 2) {
    const Int k = period_;
    return vals_[static_cast<std::size_t>(floor_mod(n, k))] + k * floor_div(n, k);
  }
  if (n >= lo_ && n < window_end()) return vals_[static_cast<std::size_t>(n - lo_)];
  return n - chi_;
}

void check_period(int k) {
  if (k == 1 || k < 0) throw Error(ErrorKind::BadPeriod, "period " + std::to_string(k));
}

Perm make_affine(int k, std::vector<Int> window) {
  if (k < 2) throw Error(ErrorKind::BadPeriod, "affine period " + std::to_string(k));
  if (static_cast<Int>(window.size()) != k) {
    throw Error(ErrorKind::BadParameters, "affine window " + show_ints(window) +
                                              " does not have length " + std::to_string(k));
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  Int excess = 0;
  for (Int i = 0; i < k; ++i) {
    const auto r = static_cast<std::size_t>(floor_mod(window[i], k));
    if (seen[r]) throw Error(ErrorKind::DuplicateResidue, "window " + show_ints(window));
    seen[r] = true;
    excess += window[i] - i;
  }
  // Distinct residues force sum(w[i] - i) == 0 (mod k).
  assert(floor_mod(excess, k) == 0);
  Perm p(k, -excess / k, 0, std::move(window));
  assert(p.shift() == shift_by_counting(p));
  return p;
}

Perm make_finitary(Int chi, Int lo, std::vector<Int> vals) {
  const Int len = static_cast<Int>(vals.size());
  std::vector<bool> seen(vals.size(), false);
  for (Int v : vals) {
    const Int slot = v - (lo - chi);
    if (slot < 0 || slot >= len || seen[static_cast<std::size_t>(slot)]) {
      throw Error(ErrorKind::NotAWindowPermutation,
                  "values " + show_ints(vals) + " are not a permutation of [" +
                      std::to_string(lo - chi) + ", " + std::to_string(lo + len - 1 - chi) + "]");
    }
    seen[static_cast<std::size_t>(slot)] = true;
  }
  // Trim fixed endpoints (where the value already equals n - chi).
  std::size_t front = 0;
  std::size_t back = vals.size();
  while (front < back && vals[front] == lo + static_cast<Int>(front) - chi) ++front;
  while (back > front && vals[back - 1] == lo + static_cast<Int>(back) - 1 - chi) --back;
  if (front == back) return Perm(0, chi, 0, {});
  std::vector<Int> trimmed(vals.begin() + static_cast<std::ptrdiff_t>(front),
                           vals.begin() + static_cast<std::ptrdiff_t>(back));
  Perm p(0, chi, lo + static_cast<Int>(front), std::move(trimmed));
  assert(p.shift() == shift_by_counting(p));
  return p;
}

Perm identity(int k) { return iota(0, k); }

Perm iota(Int n, int k) {
  check_period(k);
  if (k == 0) return make_finitary(n, 0, {});
  std::vector<Int> w(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) w[i] = i - n;
  return make_affine(k, std::move(w));
}

Perm sigma(Int m, int k) {
  check_period(k);
  if (k == 0) return make_finitary(0, m, {m + 1, m});
  std::vector<Int> w(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) w[i] = i;
  const Int r = floor_mod(m, k);
  if (r == k - 1) {
    // Swaps k-1 <-> k, hence also -1 <-> 0.
    w[k - 1] = k;
    w[0] = -1;
  } else {
    std::swap(w[r], w[r + 1]);
  }
  return make_affine(k, std::move(w));
}

Int apply_inverse(const Perm& p, Int n) {
  const auto& w = p.window();
  if (p.is_affine()) {
    const Int k = p.period();
    for (Int i = 0; i < k; ++i) {
      if (floor_mod(w[i] - n, k) == 0) return i + (n - w[i]);
    }
    assert(false && "affine window misses a residue");
    return 0;
  }
  const Int lo = p.window_begin();
  const Int chi = p.shift();
  if (n >= lo - chi && n < p.window_end() - chi) {
    auto it = std::find(w.begin(), w.end(), n);
    assert(it != w.end());
    return lo + (it - w.begin());
  }
  return n + chi;
}

Perm inverse(const Perm& p) {
  const auto& w = p.window();
  if (p.is_affine()) {
    const Int k = p.period();
    std::vector<Int> v(static_cast<std::size_t>(k));
    for (Int i = 0; i < k; ++i) {
      const Int r = floor_mod(w[i], k);
      v[r] = i - (w[i] - r);
    }
    return make_affine(p.period(), std::move(v));
  }
  const Int chi = p.shift();
  const Int lo = p.window_begin() - chi;
  std::vector<Int> v(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    v[static_cast<std::size_t>(w[j] - lo)] = p.window_begin() + static_cast<Int>(j);
  }
  return make_finitary(-chi, lo, std::move(v));
}

Perm compose(const Perm& a, const Perm& b) {
  require_same_period(a, b, "compose");
  if (a.is_affine()) {
    std::vector<Int> w(static_cast<std::size_t>(a.period()));
    for (Int i = 0; i < a.period(); ++i) w[i] = a(b(i));
    return make_affine(a.period(), std::move(w));
  }
  // Outside b's window and outside b^{-1}(a's window) the product is
  // n -> n - chi_a - chi_b.
  Int lo = b.window_begin();
  Int hi = b.window_end();
  if (!a.window().empty()) {
    const Int alo = a.window_begin() + b.shift();
    const Int ahi = a.window_end() + b.shift();
    if (b.window().empty()) {
      lo = alo;
      hi = ahi;
    } else {
      lo = std::min(lo, alo);
      hi = std::max(hi, ahi);
    }
  }
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(std::max<Int>(hi - lo, 0)));
  for (Int n = lo; n < hi; ++n) v.push_back(a(b(n)));
  return make_finitary(a.shift() + b.shift(), lo, std::move(v));
}

Int displacement(const Perm& p) {
  Int m = p.is_affine() ? 0 : std::abs(p.shift());
  for (Int n = p.window_begin(); n < p.window_end(); ++n) m = std::max(m, std::abs(p(n) - n));
  return m;
}

Int shift_by_counting(const Perm& p) {
  // |p(n) - n| <= M, so only n in [-M-1, M] can change sign.
  const Int bound = displacement(p) + 1;
  Int nonneg_to_neg = 0;
  Int neg_to_nonneg = 0;
  for (Int n = -bound; n < bound; ++n) {
    if (n >= 0 && p(n) < 0) ++nonneg_to_neg;
    if (n < 0 && p(n) >= 0) ++neg_to_nonneg;
  }
  return nonneg_to_neg - neg_to_nonneg;
}

Int slipface(const Perm& p, Int a, Int b) {
  const auto& w = p.window();
  if (p.is_affine()) {
    const Int k = p.period();
    Int total = 0;
    for (Int i = 0; i < k; ++i) {
      // #{q : i + qk >= b, w[i] + qk < a}
      const Int qmin = ceil_div(b - i, k);
      const Int qmax = floor_div(a - w[i] - 1, k);
      total += std::max<Int>(0, qmax - qmin + 1);
    }
    return total;
  }
  const Int lo = p.window_begin();
  const Int hi = p.window_end();
  const Int chi = p.shift();
  Int inside = 0;
  for (Int n = std::max(b, lo); n < hi; ++n) {
    if (w[static_cast<std::size_t>(n - lo)] < a) ++inside;
  }
  // Outside the window n -> n - chi, so n counts iff b <= n < a + chi.
  const Int band = std::max<Int>(0, a + chi - b);
  const Int overlap = std::max<Int>(0, std::min(a + chi, hi) - std::max(b, lo));
  return inside + band - overlap;
}

std::vector<InversionClass> inversion_classes(const Perm& p) {
  std::vector<InversionClass> out;
  const auto& w = p.window();
  if (p.is_affine()) {
    const Int k = p.period();
    [[maybe_unused]] const Int bound = displacement(p);
    for (Int n = 0; n < k; ++n) {
      for (Int j = 0; j < k; ++j) {
        // m = j + qk with m < n and p(m) > p(n).
        const Int qmin = floor_div(w[n] - w[j], k) + 1;
        const Int qmax = ceil_div(n - j, k) - 1;
        assert(qmax - qmin + 1 <= 2 * bound / k + 1);
        for (Int q = qmin; q <= qmax; ++q) out.push_back({j + q * k, n});
      }
    }
  } else {
    // Inversions never leave the window: outside it p is increasing and
    // the window maps onto an interval positioned between the two tails.
    const Int lo = p.window_begin();
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] > w[j]) out.push_back({lo + static_cast<Int>(i), lo + static_cast<Int>(j)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int inv_count(const Perm& p) {
  const auto& w = p.window();
  if (p.is_affine()) return static_cast<Int>(inversion_classes(p).size());
  Int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

std::vector<Cell> essential_set(const Perm& p) {
  std::vector<Cell> out;
  // (a, b) in Ess requires a descent at b - 1 with p(b) < a <= p(b - 1).
  const Int first = p.is_affine() ? 0 : p.window_begin() + 1;
  const Int last = p.window_end();
  for (Int b = first; b < last; ++b) {
    const Int top = p(b - 1);
    const Int bottom = p(b);
    for (Int a = bottom + 1; a <= top; ++a) {
      if (apply_inverse(p, a - 1) >= b && b > apply_inverse(p, a)) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Perm& a, const Perm& b) {
  require_same_period(a, b, "bruhat");
  if (a.shift() != b.shift()) {
    throw Error(ErrorKind::ShiftMismatch, "bruhat: shifts " + std::to_string(a.shift()) +
                                              " and " + std::to_string(b.shift()));
  }
  for (const auto& [x, y] : essential_set(a)) {
    if (slipface(a, x, y) > slipface(b, x, y)) return false;
  }
  return true;
}

std::vector<Int> descents_right(const Perm& p) {
  std::vector<Int> out;
  const Int first = p.is_affine() ? 0 : p.window_begin();
  const Int last = p.is_affine() ? p.period() : p.window_end() - 1;
  for (Int m = first; m < last; ++m) {
    if (p(m) > p(m + 1)) out.push_back(m);
  }
  return out;
}

std::vector<Int> descents_left(const Perm& p) { return descents_right(inverse(p)); }

std::optional<Perm> as_period(const Perm& p, int k2) {
  check_period(k2);
  if (k2 == p.period()) return p;
  if (k2 == 0) {
    // A periodic permutation has finitely many inversions only if it is a shift.
    if (inv_count(p) != 0) return std::nullopt;
    return iota(p.shift(), 0);
  }
  // Periodicity under +k2 is checked on a full period of both structures.
  const Int span = p.is_affine() ? static_cast<Int>(p.period()) * k2
                                 : std::max<Int>(p.window_end() - p.window_begin(), 1) + 2 * k2;
  const Int start = p.is_affine() ? 0 : p.window_begin() - k2;
  for (Int n = start; n < start + span; ++n) {
    if (p(n + k2) != p(n) + k2) return std::nullopt;
  }
  std::vector<Int> w(static_cast<std::size_t>(k2));
  for (Int i = 0; i < k2; ++i) w[i] = p(i);
  return make_affine(k2, std::move(w));
}

}  // namespace tperm
