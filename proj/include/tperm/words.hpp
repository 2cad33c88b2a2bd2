#pragma once

// Reduced words, reduced tuples with prescribed shifts, and Hecke words.
//
// A word [m1, ..., mL] stands for sigma_{m1} sigma_{m2} ... sigma_{mL}
// (leftmost letter applied last). Letters are integers for period 0 and
// residues in [0, k) for period k >= 2.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tperm/perm.hpp"

namespace tperm {

using Count = boost::multiprecision::cpp_int;

enum class WordFlavor { Reduced, Hecke };
enum class EvalMode { Ordinary, Demazure };

struct Word {
  int period = 0;
  /// nullopt is the identity letter (Hecke words only).
  std::vector<std::optional<Int>> letters;
  WordFlavor flavor = WordFlavor::Reduced;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

Perm evaluate_word(const Word& w, EvalMode mode);

/// iota_c p iota_{-c}; sends sigma_m to sigma_{m - c}.
Perm conjugate_by_iota(const Perm& p, Int c);

/// Lazily yields the reduced words of a shift-0 permutation in
/// lexicographic letter order.
class ReducedWordStream {
 public:
  explicit ReducedWordStream(const Perm& p);

  std::optional<Word> next();

 private:
  struct Frame {
    Perm rest;
    std::vector<Int> choices;
    std::size_t next = 0;
  };

  int period_;
  Int letter_lo_;
  Int letter_hi_;
  std::vector<Frame> stack_;
  std::vector<std::optional<Int>> prefix_;
};

std::vector<Word> reduced_words(const Perm& p);
Count reduced_word_count(const Perm& p);

struct ShiftedTuple {
  std::vector<Perm> factors;
  std::vector<Int> shifts;

  friend bool operator==(const ShiftedTuple&, const ShiftedTuple&) = default;
  friend auto operator<=>(const ShiftedTuple&, const ShiftedTuple&) = default;
};

/// All reduced tuples (b_1, ..., b_l) with shift(b_i) = shifts[i],
/// b_1 ... b_l = target and, when given, inv(b_i) <= cap. Sorted.
std::vector<ShiftedTuple> reduced_tuples(const Perm& target, std::span<const Int> shifts,
                                         std::optional<Int> cap = std::nullopt);

/// Number of length-g sequences of identity/generator letters whose
/// Demazure product is p.
Count hecke_word_count(const Perm& p, Int g);

}  // namespace tperm
