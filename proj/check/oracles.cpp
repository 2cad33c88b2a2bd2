#include "tperm_check/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tperm/bntheory.hpp"

namespace tperm::check {

Int slipface_by_scan(const Perm& p, Int a, Int b) {
  // p(n) >= n - displacement, so nothing past a + displacement counts.
  const Int stop = a + displacement(p);
  Int count = 0;
  for (Int n = b; n <= stop; ++n) {
    if (p(n) < a) ++count;
  }
  return count;
}

Int iota_sigma_slipface(Int n, Int m, int k, Int a, Int b) {
  const bool congruent = k == 0 ? b == m + 1 : floor_mod(b - m - 1, k) == 0;
  return std::max<Int>(a - b + n, 0) + (a + n == b && congruent ? 1 : 0);
}

bool bruhat_leq_pointwise(const Perm& a, const Perm& b, const Box& box) {
  for (Int x = box.a_lo; x <= box.a_hi; ++x) {
    for (Int y = box.b_lo; y <= box.b_hi; ++y) {
      if (slipface(a, x, y) > slipface(b, x, y)) return false;
    }
  }
  return true;
}

Count hecke_count_naive(const Perm& p, Int g) {
  const int k = p.period();
  std::vector<std::optional<Int>> alphabet{std::nullopt};
  if (k == 0) {
    // Both m and m + 1 inside the window padded by one on each side.
    for (Int m = p.window_begin() - 1; m < p.window_end(); ++m) alphabet.emplace_back(m);
  } else {
    for (Int m = 0; m < k; ++m) alphabet.emplace_back(m);
  }
  std::vector<std::size_t> digits(static_cast<std::size_t>(g), 0);
  Count total = 0;
  while (true) {
    Word w{k, {}, WordFlavor::Hecke};
    for (std::size_t d : digits) w.letters.push_back(alphabet[d]);
    if (evaluate_word(w, EvalMode::Demazure) == p) ++total;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == alphabet.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return total;
}

std::vector<ShiftedTuple> reduced_tuples_bruteforce(const Perm& target, std::span<const Int> shifts,
                                                    std::optional<Int> cap) {
  const int k = target.period();
  const Int chi = target.shift();
  const Perm normalized = compose(iota(-chi, k), target);
  const Int length = inv_count(target);
  const auto lower = bruhat_lower_set(normalized);

  // Candidates for factor i: iota_{P} q iota_{-(P - c_i)} with q <= normalized,
  // indexed by the remaining prefix twist P.
  std::vector<std::vector<Perm>> candidates(shifts.size());
  Int twist = chi;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    for (const Perm& q : lower) {
      if (cap && inv_count(q) > *cap) continue;
      candidates[i].push_back(compose(iota(twist, k), compose(q, iota(-(twist - shifts[i]), k))));
    }
    twist -= shifts[i];
  }

  std::vector<ShiftedTuple> out;
  const std::vector<Int> shift_vec(shifts.begin(), shifts.end());
  std::vector<Perm> chosen;
  const auto search = [&](auto&& self, std::size_t i, const Perm& acc, Int used) -> void {
    if (i == shifts.size()) {
      if (acc == target && used == length) out.push_back({chosen, shift_vec});
      return;
    }
    for (const Perm& c : candidates[i]) {
      const Int l = inv_count(c);
      if (used + l > length) continue;
      chosen.push_back(c);
      self(self, i + 1, compose(acc, c), used + l);
      chosen.pop_back();
    }
  };
  search(search, 0, identity(k), 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Int>> bigrassmannian_rhos(const std::vector<Int>& pi) {
  std::vector<Int> rho(pi.size());
  std::iota(rho.begin(), rho.end(), 0);
  std::vector<std::vector<Int>> out;
  do {
    if (is_bigrassmannian(recompose({rho, pi}))) out.push_back(rho);
  } while (std::next_permutation(rho.begin(), rho.end()));
  return out;
}

}  // namespace tperm::check
