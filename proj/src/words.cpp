#include "tperm/words.hpp"

#include <cassert>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "tperm/demazure.hpp"

namespace tperm {

namespace {

void require_shift_zero(const Perm& p, const char* op) {
  if (p.shift() != 0) {
    throw Error(ErrorKind::ShiftNonzero, std::string(op) + ": shift " + std::to_string(p.shift()));
  }
}

// Calls f(parts) for every composition of total into n nonnegative parts,
// each at most cap.
template <class F>
void for_each_composition(Int total, std::size_t n, Int cap, F&& f) {
  std::vector<Int> parts(n, 0);
  const auto fill = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i + 1 == n) {
      if (left > cap) return;
      parts[i] = left;
      f(parts);
      return;
    }
    for (Int v = 0; v <= std::min(left, cap); ++v) {
      parts[i] = v;
      self(self, i + 1, left - v);
    }
  };
  fill(fill, 0, total);
}

Count count_words(const Perm& p, std::map<Perm, Count>& memo) {
  if (inv_count(p) == 0) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  Count total = 0;
  for (Int m : descents_right(p)) total += count_words(compose(p, sigma(m, p.period())), memo);
  memo.emplace(p, total);
  return total;
}

Count count_hecke(const Perm& p, Int g, std::map<std::pair<Int, Perm>, Count>& memo) {
  if (g == 0) return inv_count(p) == 0 ? 1 : 0;
  const Int length = inv_count(p);
  if (length > g) return 0;
  auto key = std::make_pair(g, p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Last letter: identity, a right descent m absorbed by p, or a right
  // descent m extending p sigma_m.
  const auto descents = descents_right(p);
  Count total = count_hecke(p, g - 1, memo) * (1 + descents.size());
  for (Int m : descents) total += count_hecke(compose(p, sigma(m, p.period())), g - 1, memo);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Perm evaluate_word(const Word& w, EvalMode mode) {
  check_period(w.period);
  Perm acc = identity(w.period);
  for (const auto& letter : w.letters) {
    if (!letter) continue;
    const Perm s = sigma(*letter, w.period);
    acc = mode == EvalMode::Ordinary ? compose(acc, s) : demazure(acc, s);
  }
  return acc;
}

Perm conjugate_by_iota(const Perm& p, Int c) {
  return compose(iota(c, p.period()), compose(p, iota(-c, p.period())));
}

ReducedWordStream::ReducedWordStream(const Perm& p)
    : period_(p.period()), letter_lo_(p.window_begin()), letter_hi_(p.window_end() - 2) {
  require_shift_zero(p, "reduced_words");
  stack_.push_back({p, descents_left(p), 0});
}

std::optional<Word> ReducedWordStream::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.choices.empty()) {
      // Leaf: the remaining factor is the identity.
      Word w{period_, prefix_, WordFlavor::Reduced};
      stack_.pop_back();
      if (!prefix_.empty()) prefix_.pop_back();
      return w;
    }
    if (top.next == top.choices.size()) {
      stack_.pop_back();
      if (!prefix_.empty()) prefix_.pop_back();
      continue;
    }
    const Int m = top.choices[top.next++];
    // A k = 0 reduced word only swaps positions inside the target's window.
    assert(period_ != 0 || (m >= letter_lo_ && m <= letter_hi_));
    Perm rest = compose(sigma(m, period_), top.rest);
    prefix_.push_back(m);
    auto choices = descents_left(rest);
    stack_.push_back({std::move(rest), std::move(choices), 0});
  }
  return std::nullopt;
}

std::vector<Word> reduced_words(const Perm& p) {
  std::vector<Word> out;
  ReducedWordStream stream(p);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

Count reduced_word_count(const Perm& p) {
  require_shift_zero(p, "reduced_word_count");
  std::map<Perm, Count> memo;
  return count_words(p, memo);
}

std::vector<ShiftedTuple> reduced_tuples(const Perm& target, std::span<const Int> shifts,
                                         std::optional<Int> cap) {
  if (shifts.empty()) throw Error(ErrorKind::EmptySequence, "reduced_tuples needs at least one factor");
  Int sum = 0;
  for (Int c : shifts) sum += c;
  if (sum != target.shift()) {
    throw Error(ErrorKind::ShiftSumMismatch, "shifts sum to " + std::to_string(sum) +
                                                 ", target shift is " + std::to_string(target.shift()));
  }
  const int k = target.period();
  const Int chi = target.shift();
  const Perm normalized = compose(iota(-chi, k), target);

  // Factor i is iota_{P_{i-1}} B_i iota_{-P_i} with P_i = chi - (c_1 + ... + c_i),
  // so the product telescopes to iota_chi B_1 ... B_l = target.
  std::vector<Int> prefix(shifts.size() + 1, chi);
  for (std::size_t i = 0; i < shifts.size(); ++i) prefix[i + 1] = prefix[i] - shifts[i];
  std::vector<Perm> left_twist;
  std::vector<Perm> right_twist;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    left_twist.push_back(iota(prefix[i], k));
    right_twist.push_back(iota(-prefix[i + 1], k));
  }

  std::set<std::vector<Perm>> seen;
  ReducedWordStream stream(normalized);
  while (auto word = stream.next()) {
    const Int length = static_cast<Int>(word->letters.size());
    for_each_composition(length, shifts.size(), cap.value_or(length), [&](const std::vector<Int>& parts) {
      std::vector<Perm> factors;
      std::size_t at = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        Perm block = identity(k);
        for (Int j = 0; j < parts[i]; ++j) block = compose(block, sigma(*word->letters[at++], k));
        factors.push_back(compose(left_twist[i], compose(block, right_twist[i])));
      }
      seen.insert(std::move(factors));
    });
  }

  std::vector<ShiftedTuple> out;
  const std::vector<Int> shift_vec(shifts.begin(), shifts.end());
  for (const auto& factors : seen) {
    assert(is_reduced_tuple(factors));
    assert(product(factors) == target);
    out.push_back({factors, shift_vec});
  }
  return out;
}

Count hecke_word_count(const Perm& p, Int g) {
  require_shift_zero(p, "hecke_word_count");
  if (g < 0) throw Error(ErrorKind::BadParameters, "negative word length");
  std::map<std::pair<Int, Perm>, Count> memo;
  return count_hecke(p, g, memo);
}

}  // namespace tperm
