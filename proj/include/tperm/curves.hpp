#pragma once

// Combinatorial model of line bundles on twice-marked genus-1 curves whose
// marked points differ by torsion of order k, and on chains of them.
//
// A degree-d bundle is either Generic (its transmission permutation is
// iota_{d-1}) or Torsion(m), i.e. O(mq + (d-m)p), with transmission
// permutation iota_{d-1} sigma_{m-1}. The Picard variety of each component
// collapses to these k + 1 strata; Generic is the one-dimensional stratum.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tperm/perm.hpp"

namespace tperm {

struct G1Bundle {
  int k = 0;
  Int degree = 0;
  /// nullopt is Generic; otherwise m (reduced mod k when k >= 2).
  std::optional<Int> torsion;

  friend bool operator==(const G1Bundle&, const G1Bundle&) = default;
  friend auto operator<=>(const G1Bundle&, const G1Bundle&) = default;
};

G1Bundle generic_bundle(int k, Int degree);
G1Bundle torsion_bundle(int k, Int degree, Int m);

struct ChainSpec {
  int k = 0;
  std::vector<G1Bundle> components;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
  friend auto operator<=>(const ChainSpec&, const ChainSpec&) = default;
};

/// Validates that the chain is nonempty and every component has period k.
ChainSpec make_chain(int k, std::vector<G1Bundle> components);

Perm genus1_tau(const G1Bundle& b);

/// Demazure product of the component transmission permutations.
Perm chain_tau(const ChainSpec& c);

/// Every class assignment whose chain transmission permutation dominates tau.
std::vector<ChainSpec> wtau_points_bruteforce(int k, std::span<const Int> degrees, const Perm& tau);

/// Stratum labels from the reduced-tuple decomposition with inv <= 1 per
/// factor: a Generic component labels the whole Picard stratum.
std::vector<ChainSpec> wtau_points_via_words(int k, std::span<const Int> degrees, const Perm& tau);

/// Replaces every Generic label with all k + 1 classes; sorted, deduplicated.
std::vector<ChainSpec> expand_strata(std::span<const ChainSpec> strata);

struct GeneralityReport {
  int curve_k = 0;
  int test_k = 0;
  Int bound = 0;
  Int checked = 0;
  Int full = 0;
  Int single = 0;
  Int empty = 0;
  /// Every transmission permutation on the curve lies in the period test_k group.
  bool membership = true;
  std::vector<std::string> failures;

  bool passed() const { return membership && failures.empty(); }
};

/// Checks k-general transmission of a genus-1 curve of torsion order
/// curve_k against the period test_k (default curve_k), over every
/// permutation of displacement at most bound.
GeneralityReport genus1_generality_report(int curve_k, Int bound,
                                          std::optional<int> test_k = std::nullopt);

}  // namespace tperm
