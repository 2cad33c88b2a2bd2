#include "tperm/bntheory.hpp"

#include <algorithm>
#include <string>

namespace tperm {

namespace {

void require_affine(const Perm& p, const char* op) {
  if (!p.is_affine()) {
    throw Error(ErrorKind::BadPeriod, std::string(op) + " needs period >= 2, got " +
                                          std::to_string(p.period()));
  }
}

}  // namespace

SplittingType::SplittingType(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw Error(ErrorKind::BadPeriod, "splitting type needs k >= 2 entries");
  }
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    throw Error(ErrorKind::BadParameters, "splitting type must be nondecreasing");
  }
}

Perm gamma_rd(Int r, Int chi) {
  if (r < 0 || r < chi + 1) {
    throw Error(ErrorKind::BadParameters, "gamma_rd needs r >= max(0, chi + 1); got r=" +
                                              std::to_string(r) + " chi=" + std::to_string(chi));
  }
  // [-(r-chi), -1] -> [1, r-chi] and [0, r] -> [-r, 0], increasing; n - chi elsewhere.
  const Int gap = r - chi;
  std::vector<Int> vals;
  for (Int n = -gap; n <= -1; ++n) vals.push_back(n + gap + 1);
  for (Int n = 0; n <= r; ++n) vals.push_back(n - r);
  return make_finitary(chi, -gap, std::move(vals));
}

Int splitting_u(const SplittingType& e) {
  Int u = 0;
  for (Int em : e.entries()) {
    for (Int en : e.entries()) u += std::max<Int>(0, em - en - 1);
  }
  return u;
}

Int splitting_x(const SplittingType& e, Int m) {
  Int x = 0;
  for (Int en : e.entries()) x += std::max<Int>(en + 1 + m, 0);
  return x;
}

Int splitting_d(const SplittingType& e, Int g) {
  Int d = g - 1;
  for (Int en : e.entries()) d += en + 1;
  return d;
}

ResidualPeriodic rho_pi_decompose(const Perm& p) {
  require_affine(p, "rho_pi_decompose");
  const Int k = p.period();
  ResidualPeriodic rp;
  for (Int n = 0; n < k; ++n) {
    rp.rho.push_back(floor_mod(p(n) - 1, k));
    rp.pi.push_back(floor_div(p(n) - 1, k));
  }
  return rp;
}

Perm recompose(const ResidualPeriodic& rp) {
  const Int k = static_cast<Int>(rp.rho.size());
  if (k < 2 || rp.pi.size() != rp.rho.size()) {
    throw Error(ErrorKind::BadParameters, "rho and pi must have the same length k >= 2");
  }
  std::vector<Int> w(static_cast<std::size_t>(k));
  for (Int n = 0; n < k; ++n) {
    if (rp.rho[n] < 0 || rp.rho[n] >= k) {
      throw Error(ErrorKind::BadParameters, "rho is not a permutation of {0..k-1}");
    }
    w[n] = rp.rho[n] + 1 + k * rp.pi[n];
  }
  return make_affine(static_cast<int>(k), std::move(w));
}

bool is_bigrassmannian(const Perm& p) {
  require_affine(p, "is_bigrassmannian");
  const Int k = p.period();
  for (Int n = 0; n + 1 < k; ++n) {
    if (p(n) > p(n + 1)) return false;
  }
  for (Int a = 1; a < k; ++a) {
    if (apply_inverse(p, a) > apply_inverse(p, a + 1)) return false;
  }
  return true;
}

Int periodic_inversion_bound(const Perm& p) {
  const auto pi = rho_pi_decompose(p).pi;
  Int bound = 0;
  for (Int pm : pi) {
    for (Int pn : pi) bound += std::max<Int>(0, pn - pm - 1);
  }
  return bound;
}

std::vector<Int> bigrassmannian_rho(const std::vector<Int>& pi) {
  const std::size_t k = pi.size();
  std::vector<Int> rho(k, 0);
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t m = 0; m < k; ++m) {
      if (pi[m] > pi[n] || (m < n && pi[m] == pi[n])) ++rho[n];
    }
  }
  return rho;
}

Perm gamma_splitting(const SplittingType& e) {
  const auto& entries = e.entries();
  const std::size_t k = entries.size();
  std::vector<Int> pi(k);
  for (std::size_t n = 0; n < k; ++n) pi[n] = -entries[k - 1 - n] - 1;
  return recompose({bigrassmannian_rho(pi), std::move(pi)});
}

SplittingType splitting_type_of(const Perm& p) {
  auto entries = rho_pi_decompose(p).pi;
  for (Int& v : entries) v = -v - 1;
  std::sort(entries.begin(), entries.end());
  return SplittingType(std::move(entries));
}

}  // namespace tperm
