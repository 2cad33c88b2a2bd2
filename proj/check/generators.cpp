#include "tperm_check/generators.hpp"

#include <algorithm>
#include <set>

#include "tperm/bntheory.hpp"
#include "tperm/demazure.hpp"

namespace tperm::check {

namespace {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

}  // namespace

Perm random_perm(Rng& rng, int k, Int extent) {
  if (k == 0) {
    const Int len = uniform(rng, 0, extent);
    const Int lo = uniform(rng, -3, 1);
    const Int chi = uniform(rng, -2, 2);
    std::vector<Int> vals;
    for (Int n = lo; n < lo + len; ++n) vals.push_back(n - chi);
    std::shuffle(vals.begin(), vals.end(), rng);
    return make_finitary(chi, lo, std::move(vals));
  }
  // A random residue permutation, each value lifted by a random multiple of
  // k that keeps it within extent of its position.
  std::vector<Int> residues(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) residues[i] = i;
  std::shuffle(residues.begin(), residues.end(), rng);
  std::vector<Int> w(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) {
    const Int qlo = ceil_div(i - extent - residues[i], k);
    const Int qhi = floor_div(i + extent - residues[i], k);
    w[i] = residues[i] + k * uniform(rng, qlo, qhi);
  }
  return make_affine(k, std::move(w));
}

Perm random_shift0(Rng& rng, int k, Int extent) {
  const Perm p = random_perm(rng, k, extent);
  return compose(iota(-p.shift(), k), p);
}

int period_for(std::size_t instance) {
  constexpr int ks[] = {0, 2, 3};
  return ks[instance % 3];
}

std::vector<Perm> shift0_ball(int k, Int max_inv, Int letters) {
  std::vector<Int> gens;
  if (k == 0) {
    for (Int m = 0; m + 1 < letters; ++m) gens.push_back(m);
  } else {
    for (Int m = 0; m < k; ++m) gens.push_back(m);
  }
  std::set<Perm> seen{identity(k)};
  std::vector<Perm> frontier{identity(k)};
  for (Int len = 0; len < max_inv; ++len) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (Int m : gens) {
        Perm q = compose(p, sigma(m, k));
        if (inv_count(q) == len + 1 && seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> corpus() {
  std::vector<Perm> out = {
      make_finitary(1, -1, {1, -1, 0, -2}),
      iota(3, 0),
      iota(-2, 3),
      identity(0),
      identity(2),
      sigma(0, 0),
      sigma(-4, 0),
      sigma(1, 3),
      sigma(0, 2),
      make_affine(2, {3, -2}),
      make_affine(2, {0, 3}),
      make_affine(4, {2, -1, 5, 4}),
      make_finitary(0, 0, {3, 2, 1, 0}),
      gamma_rd(1, -1),
      gamma_rd(4, 0),
      gamma_splitting(SplittingType({-3, 0, 1})),
      demazure(sigma(0, 3), iota(2, 3)),
  };
  Rng rng(20240611);
  for (std::size_t i = 0; i < 60; ++i) out.push_back(random_perm(rng, period_for(i)));
  return out;
}

}  // namespace tperm::check
