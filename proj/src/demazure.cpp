#include "tperm/demazure.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <string>

namespace tperm {

namespace {

std::string cell(Int a, Int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Int window_lo(const Perm& p) { return p.window_begin(); }
Int window_hi(const Perm& p) { return p.is_affine() ? p.period() : p.window_end(); }

void require_same_period(const Perm& a, const Perm& b, const char* op) {
  if (a.period() != b.period()) {
    throw Error(ErrorKind::PeriodMismatch, std::string(op) + ": periods " +
                                               std::to_string(a.period()) + " and " +
                                               std::to_string(b.period()));
  }
}

InversionClass normalized(Int m, Int n, int k) {
  if (k < 2) return {m, n};
  const Int t = floor_div(n, k) * k;
  return {m - t, n - t};
}

}  // namespace

SlipfaceTable::SlipfaceTable(const Box& box, Int chi, Int margin)
    : box_(box), chi_(chi), margin_(margin) {
  if (box.a_hi < box.a_lo || box.b_hi < box.b_lo) {
    throw Error(ErrorKind::BadParameters, "empty slipface box");
  }
  values_.assign(static_cast<std::size_t>(rows() * cols()), 0);
}

SlipfaceTable tabulate(const Perm& p, const Box& box) {
  SlipfaceTable t(box, p.shift(), std::max<Int>(displacement(p), 1));
  for (Int a = box.a_lo; a <= box.a_hi; ++a) {
    for (Int b = box.b_lo; b <= box.b_hi; ++b) t(a, b) = slipface(p, a, b);
  }
  return t;
}

Box default_box(const Perm& p) {
  const Int m = displacement(p);
  const Int b_lo = window_lo(p) - 1;
  const Int b_hi = window_hi(p);
  return {b_lo - 2 * m - 2, b_hi + 2 * m + 2, b_lo, b_hi};
}

void validate_table(const SlipfaceTable& t) {
  const Box& box = t.box();
  for (Int a = box.a_lo; a <= box.a_hi; ++a) {
    for (Int b = box.b_lo; b <= box.b_hi; ++b) {
      const Int v = t(a, b);
      if (v < 0) throw Error(ErrorKind::BadAsymptotics, "negative value at " + cell(a, b));
      if (a - b <= -t.margin() && v != 0) {
        throw Error(ErrorKind::BadAsymptotics, "expected 0 at " + cell(a, b));
      }
      if (a - b >= t.margin() && v != t.chi() + a - b) {
        throw Error(ErrorKind::BadAsymptotics,
                    "expected chi + a - b = " + std::to_string(t.chi() + a - b) + " at " + cell(a, b));
      }
      if (a < box.a_hi && b < box.b_hi) {
        const Int second = t(a + 1, b) - t(a, b) - t(a + 1, b + 1) + t(a, b + 1);
        if (second < 0) throw Error(ErrorKind::NotSubmodular, "at " + cell(a, b));
      }
    }
  }
}

std::optional<SlipfaceTable> min_plus(const SlipfaceTable& left, const SlipfaceTable& right) {
  const Box& lb = left.box();
  const Box& rb = right.box();
  if (lb.b_lo != rb.a_lo || lb.b_hi != rb.a_hi) {
    throw Error(ErrorKind::BadParameters, "min_plus: middle ranges differ");
  }
  SlipfaceTable out({lb.a_lo, lb.a_hi, rb.b_lo, rb.b_hi}, left.chi() + right.chi(),
                    left.margin() + right.margin());
  for (Int x = lb.a_lo; x <= lb.a_hi; ++x) {
    for (Int y = rb.b_lo; y <= rb.b_hi; ++y) {
      Int best = std::numeric_limits<Int>::max();
      Int arg = lb.b_lo;
      for (Int l = lb.b_lo; l <= lb.b_hi; ++l) {
        const Int v = left(x, l) + right(l, y);
        if (v < best) {
          best = v;
          arg = l;
        }
      }
      if (arg == lb.b_lo || right(lb.b_hi, y) + left(x, lb.b_hi) == best) return std::nullopt;
      out(x, y) = best;
    }
  }
  return out;
}

Perm perm_from_slipface(const SlipfaceTable& t, int k) {
  check_period(k);
  validate_table(t);
  const Box& box = t.box();
  Int first = box.b_lo;
  Int last = box.b_hi;  // positions [first, last)
  if (k >= 2) {
    if (box.b_lo > 0 || box.b_hi < k) {
      throw Error(ErrorKind::BadAsymptotics, "box columns must cover [0, k]");
    }
    for (Int a = box.a_lo; a + k <= box.a_hi; ++a) {
      for (Int b = box.b_lo; b + k <= box.b_hi; ++b) {
        if (t(a, b) != t(a + k, b + k)) {
          throw Error(ErrorKind::InconsistentPeriod, "at " + cell(a, b));
        }
      }
    }
    first = 0;
    last = k;
  }
  // s(a, b) - s(a, b + 1) = [p(b) < a], so p(b) is the last a where it is 0.
  std::vector<Int> vals;
  for (Int b = first; b < last; ++b) {
    std::optional<Int> found;
    for (Int a = box.a_lo; a < box.a_hi; ++a) {
      const Int below = t(a, b) - t(a, b + 1);
      const Int above = t(a + 1, b) - t(a + 1, b + 1);
      if (below < 0 || below > 1 || above < 0 || above > 1) {
        throw Error(ErrorKind::NotSubmodular, "column difference out of {0,1} at " + cell(a, b));
      }
      if (below == 0 && above == 1) {
        found = a;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::BadAsymptotics,
                  "value at position " + std::to_string(b) + " is outside the box rows");
    }
    vals.push_back(*found);
  }

  Perm p;
  if (k >= 2) {
    try {
      p = make_affine(k, std::move(vals));
    } catch (const Error& e) {
      throw Error(ErrorKind::InconsistentPeriod, e.what());
    }
  } else {
    try {
      p = make_finitary(t.chi(), first, std::move(vals));
    } catch (const Error& e) {
      throw Error(ErrorKind::BadAsymptotics, std::string("box does not cover the window; ") + e.what());
    }
  }
  if (p.shift() != t.chi()) {
    throw Error(ErrorKind::BadAsymptotics, "recovered shift " + std::to_string(p.shift()) +
                                               " differs from table chi " + std::to_string(t.chi()));
  }
  for (Int a = box.a_lo; a <= box.a_hi; ++a) {
    for (Int b = box.b_lo; b <= box.b_hi; ++b) {
      if (slipface(p, a, b) != t(a, b)) {
        throw Error(ErrorKind::BadAsymptotics, "table is not a slipface near " + cell(a, b));
      }
    }
  }
  return p;
}

Perm demazure(const Perm& a, const Perm& b) {
  require_same_period(a, b, "demazure");
  const int k = a.period();
  const Int chi = a.shift() + b.shift();

  // Positions that can move. For k = 0, a * b = iota_chi (c * b0) where c is
  // a conjugate of iota_{-chi_a} a supported on a's window moved by chi_b,
  // and b0 = iota_{-chi_b} b is supported on b's window.
  Int lo = 0;
  Int hi = k;
  if (k == 0) {
    const bool a_empty = a.window().empty();
    const bool b_empty = b.window().empty();
    if (a_empty && b_empty) return iota(chi, 0);
    const Int alo = a.window_begin() + b.shift();
    const Int ahi = a.window_end() + b.shift();
    lo = b_empty ? alo : (a_empty ? b.window_begin() : std::min(alo, b.window_begin()));
    hi = b_empty ? ahi : (a_empty ? b.window_end() : std::max(ahi, b.window_end()));
  }

  const Int da = displacement(a);
  const Int db = displacement(b);
  const Int margin = da + db;
  const Int reach = std::max(da, db) + 1;
  const Box rows_cols{lo - margin - 1, hi + margin + 1, lo, hi};

  for (Int widen = 0;; widen = 2 * widen + 4) {
    const Int l_lo = std::min(rows_cols.a_lo, rows_cols.b_lo) - reach - 2 - widen;
    const Int l_hi = std::max(rows_cols.a_hi, rows_cols.b_hi) + reach + 2 + widen;
    const SlipfaceTable left = tabulate(a, {rows_cols.a_lo, rows_cols.a_hi, l_lo, l_hi});
    const SlipfaceTable right = tabulate(b, {l_lo, l_hi, rows_cols.b_lo, rows_cols.b_hi});
    if (auto prod = min_plus(left, right)) {
      SlipfaceTable t(rows_cols, chi, std::max<Int>(margin, 1));
      for (Int x = rows_cols.a_lo; x <= rows_cols.a_hi; ++x) {
        for (Int y = rows_cols.b_lo; y <= rows_cols.b_hi; ++y) t(x, y) = (*prod)(x, y);
      }
      Perm p = perm_from_slipface(t, k);
      assert(p.shift() == chi);
      return p;
    }
    assert(widen < 1'000'000 && "min-plus range failed to certify");
  }
}

Perm demazure_fold(std::span<const Perm> ps) {
  if (ps.empty()) throw Error(ErrorKind::EmptySequence, "demazure_fold of nothing");
  Perm acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = demazure(acc, ps[i]);
  return acc;
}

Perm product(std::span<const Perm> ps) {
  if (ps.empty()) throw Error(ErrorKind::EmptySequence, "product of nothing");
  Perm acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = compose(acc, ps[i]);
  return acc;
}

bool is_reduced_pair(const Perm& a, const Perm& b) {
  require_same_period(a, b, "is_reduced_pair");
  const auto left = inversion_classes(a);
  const auto right = inversion_classes(inverse(b));
  std::vector<InversionClass> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(common));
  return common.empty();
}

bool is_reduced_tuple(std::span<const Perm> ps) {
  if (ps.empty()) throw Error(ErrorKind::EmptySequence, "is_reduced_tuple of nothing");
  const int k = ps.front().period();
  for (const Perm& p : ps) require_same_period(ps.front(), p, "is_reduced_tuple");

  const auto target = inversion_classes(product(ps));
  std::vector<InversionClass> pulled;
  Perm suffix = identity(k);  // a_{n+1} ... a_l
  for (std::size_t n = ps.size(); n-- > 0;) {
    const Perm back = inverse(suffix);
    for (const auto& [u, v] : inversion_classes(ps[n])) {
      const Int m1 = back(u);
      const Int m2 = back(v);
      if (m1 >= m2) return false;
      pulled.push_back(normalized(m1, m2, k));
    }
    suffix = compose(ps[n], suffix);
  }
  std::sort(pulled.begin(), pulled.end());
  if (std::adjacent_find(pulled.begin(), pulled.end()) != pulled.end()) return false;
  return pulled == target;
}

bool is_length_additive(std::span<const Perm> ps) {
  Int total = 0;
  for (const Perm& p : ps) total += inv_count(p);
  return inv_count(product(ps)) == total;
}

std::vector<Perm> bruhat_lower_set(const Perm& p, std::size_t bound) {
  std::vector<Perm> out;
  std::size_t visited = 0;
  const auto visit = [&] {
    if (++visited > bound) {
      throw Error(ErrorKind::TooLarge, "lower-set enumeration exceeded " + std::to_string(bound));
    }
  };

  if (!p.is_affine()) {
    // Elements below p with the same shift are supported on p's window.
    std::vector<Int> vals = p.window();
    std::sort(vals.begin(), vals.end());
    do {
      visit();
      Perm q = make_finitary(p.shift(), p.window_begin(), vals);
      if (bruhat_leq(q, p)) out.push_back(std::move(q));
    } while (std::next_permutation(vals.begin(), vals.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  // q <= p forces displacement(q) <= displacement(p).
  const Int k = p.period();
  const Int reach = displacement(p);
  const Int excess = -p.shift() * k;  // sum(w[i] - i)
  std::vector<Int> w(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  const auto search = [&](auto&& self, Int i, Int partial) -> void {
    visit();
    if (i == k) {
      if (partial != excess) return;
      Perm q = make_affine(static_cast<int>(k), w);
      if (bruhat_leq(q, p)) out.push_back(std::move(q));
      return;
    }
    const Int remaining = k - i - 1;
    for (Int v = i - reach; v <= i + reach; ++v) {
      const auto r = static_cast<std::size_t>(floor_mod(v, k));
      if (used[r]) continue;
      const Int next = partial + (v - i);
      if (next - remaining * reach > excess || next + remaining * reach < excess) continue;
      used[r] = true;
      w[i] = v;
      self(self, i + 1, next);
      used[r] = false;
    }
  };
  search(search, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Perm demazure_by_max_oracle(const Perm& a, const Perm& b, std::size_t bound) {
  require_same_period(a, b, "demazure_by_max_oracle");
  const auto lower_a = bruhat_lower_set(a, bound);
  const auto lower_b = bruhat_lower_set(b, bound);
  if (lower_a.size() * lower_b.size() > bound) {
    throw Error(ErrorKind::TooLarge, "oracle product set exceeds " + std::to_string(bound));
  }
  std::set<Perm> products;
  for (const Perm& x : lower_a) {
    for (const Perm& y : lower_b) products.insert(compose(x, y));
  }
  const Perm* best = nullptr;
  Int best_inv = -1;
  for (const Perm& q : products) {
    const Int n = inv_count(q);
    if (n > best_inv) {
      best_inv = n;
      best = &q;
    }
  }
  for (const Perm& q : products) {
    if (!bruhat_leq(q, *best)) {
      throw Error(ErrorKind::NoUniqueMax, "products have no Bruhat maximum (internal error)");
    }
  }
  return *best;
}

}  // namespace tperm
