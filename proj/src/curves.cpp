#include "tperm/curves.hpp"

#include <algorithm>
#include <set>

#include "tperm/demazure.hpp"
#include "tperm/format.hpp"
#include "tperm/words.hpp"

namespace tperm {

namespace {

std::vector<std::optional<Int>> class_labels(int k, Int range) {
  std::vector<std::optional<Int>> out{std::nullopt};
  if (k >= 2) {
    for (Int m = 0; m < k; ++m) out.emplace_back(m);
  } else {
    for (Int m = -range; m <= range; ++m) out.emplace_back(m);
  }
  return out;
}

void check_locus_inputs(int k, std::span<const Int> degrees, const Perm& tau) {
  check_period(k);
  if (tau.period() != k) {
    throw Error(ErrorKind::PeriodMismatch, "tau has period " + std::to_string(tau.period()) +
                                               ", chain has " + std::to_string(k));
  }
  if (degrees.empty()) throw Error(ErrorKind::EmptySequence, "chain with no components");
  Int expected = 0;
  for (Int d : degrees) expected += d - 1;
  if (tau.shift() != expected) {
    throw Error(ErrorKind::ShiftMismatch, "tau shift " + std::to_string(tau.shift()) +
                                              " but degrees give " + std::to_string(expected));
  }
}

// All permutations of period k with displacement at most bound. For k = 0,
// the permutations of the interval window [0, bound) with shift in
// [-bound, bound].
std::vector<Perm> bounded_perms(int k, Int bound) {
  std::vector<Perm> out;
  if (k == 0) {
    for (Int chi = -bound; chi <= bound; ++chi) {
      std::vector<Int> vals;
      for (Int n = 0; n < bound; ++n) vals.push_back(n - chi);
      do {
        out.push_back(make_finitary(chi, 0, vals));
      } while (std::next_permutation(vals.begin(), vals.end()));
    }
  } else {
    std::vector<Int> w(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    const auto search = [&](auto&& self, Int i) -> void {
      if (i == k) {
        out.push_back(make_affine(k, w));
        return;
      }
      for (Int v = i - bound; v <= i + bound; ++v) {
        const auto r = static_cast<std::size_t>(floor_mod(v, k));
        if (used[r]) continue;
        used[r] = true;
        w[i] = v;
        self(self, i + 1);
        used[r] = false;
      }
    };
    search(search, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

G1Bundle generic_bundle(int k, Int degree) {
  check_period(k);
  return {k, degree, std::nullopt};
}

G1Bundle torsion_bundle(int k, Int degree, Int m) {
  check_period(k);
  return {k, degree, k >= 2 ? floor_mod(m, k) : m};
}

ChainSpec make_chain(int k, std::vector<G1Bundle> components) {
  check_period(k);
  if (components.empty()) throw Error(ErrorKind::EmptySequence, "chain with no components");
  for (auto& c : components) {
    if (c.k != k) {
      throw Error(ErrorKind::PeriodMismatch, "component period " + std::to_string(c.k) +
                                                 " in a chain of period " + std::to_string(k));
    }
    if (c.torsion && k >= 2) c.torsion = floor_mod(*c.torsion, k);
  }
  return {k, std::move(components)};
}

Perm genus1_tau(const G1Bundle& b) {
  const Perm shift_part = iota(b.degree - 1, b.k);
  if (!b.torsion) return shift_part;
  return compose(shift_part, sigma(*b.torsion - 1, b.k));
}

Perm chain_tau(const ChainSpec& c) {
  if (c.components.empty()) throw Error(ErrorKind::EmptySequence, "chain with no components");
  std::vector<Perm> taus;
  for (const auto& b : c.components) {
    if (b.k != c.k) throw Error(ErrorKind::PeriodMismatch, "component period differs from chain");
    taus.push_back(genus1_tau(b));
  }
  return demazure_fold(taus);
}

std::vector<ChainSpec> wtau_points_bruteforce(int k, std::span<const Int> degrees, const Perm& tau) {
  if (k < 2) throw Error(ErrorKind::BadPeriod, "brute-force enumeration needs k >= 2");
  check_locus_inputs(k, degrees, tau);
  const auto labels = class_labels(k, 0);
  const std::size_t l = degrees.size();
  std::vector<std::size_t> choice(l, 0);
  std::vector<ChainSpec> out;
  while (true) {
    std::vector<G1Bundle> comps;
    for (std::size_t i = 0; i < l; ++i) comps.push_back({k, degrees[i], labels[choice[i]]});
    ChainSpec chain{k, std::move(comps)};
    if (bruhat_leq(tau, chain_tau(chain))) out.push_back(std::move(chain));
    std::size_t i = 0;
    while (i < l && ++choice[i] == labels.size()) choice[i++] = 0;
    if (i == l) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChainSpec> wtau_points_via_words(int k, std::span<const Int> degrees, const Perm& tau) {
  check_locus_inputs(k, degrees, tau);
  std::vector<Int> shifts;
  for (Int d : degrees) shifts.push_back(d - 1);
  std::set<ChainSpec> strata;
  for (const auto& tuple : reduced_tuples(tau, shifts, 1)) {
    std::vector<G1Bundle> comps;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const Perm& factor = tuple.factors[i];
      if (inv_count(factor) == 0) {
        comps.push_back(generic_bundle(k, degrees[i]));
        continue;
      }
      // factor = iota_{d-1} sigma_j  <->  Torsion(j + 1)
      const Perm generator = compose(iota(-(degrees[i] - 1), k), factor);
      const auto descents = descents_right(generator);
      comps.push_back(torsion_bundle(k, degrees[i], descents.front() + 1));
    }
    strata.insert({k, std::move(comps)});
  }
  return {strata.begin(), strata.end()};
}

std::vector<ChainSpec> expand_strata(std::span<const ChainSpec> strata) {
  std::set<ChainSpec> points;
  for (const auto& s : strata) {
    if (s.k < 2) throw Error(ErrorKind::BadPeriod, "expanding Generic strata needs k >= 2");
    std::vector<ChainSpec> partial{ChainSpec{s.k, {}}};
    for (const auto& c : s.components) {
      std::vector<ChainSpec> next;
      for (const auto& prefix : partial) {
        if (c.torsion) {
          next.push_back(prefix);
          next.back().components.push_back(c);
          continue;
        }
        for (const auto& label : class_labels(s.k, 0)) {
          next.push_back(prefix);
          next.back().components.push_back({s.k, c.degree, label});
        }
      }
      partial = std::move(next);
    }
    points.insert(partial.begin(), partial.end());
  }
  return {points.begin(), points.end()};
}

GeneralityReport genus1_generality_report(int curve_k, Int bound, std::optional<int> test_k) {
  check_period(curve_k);
  if (bound < 1) throw Error(ErrorKind::BadParameters, "bound must be positive");
  GeneralityReport report;
  report.curve_k = curve_k;
  report.test_k = test_k.value_or(curve_k);
  report.bound = bound;
  check_period(report.test_k);

  const auto labels = class_labels(curve_k, bound + 2);
  const auto tau_in_test_group = [&](Int degree, const std::optional<Int>& label) {
    return as_period(genus1_tau({curve_k, degree, label}), report.test_k);
  };

  for (const auto& label : labels) {
    if (!tau_in_test_group(1, label)) {
      report.membership = false;
      report.failures.push_back("transmission permutation " +
                                format_perm(genus1_tau({curve_k, 1, label})) +
                                " is not in the period-" + std::to_string(report.test_k) + " group");
    }
  }

  for (const Perm& alpha : bounded_perms(report.test_k, bound)) {
    ++report.checked;
    const Int degree = alpha.shift() + 1;
    bool has_generic = false;
    Int members = 0;
    for (const auto& label : labels) {
      const auto tau = tau_in_test_group(degree, label);
      if (tau && bruhat_leq(alpha, *tau)) {
        ++members;
        has_generic = has_generic || !label;
      }
    }
    const Int inv = inv_count(alpha);
    if (members == 0) {
      ++report.empty;
    } else if (has_generic) {
      ++report.full;
    } else {
      ++report.single;
    }
    const Int codim = has_generic ? 0 : 1;
    if (members > 0 && codim < inv) {
      report.failures.push_back("W^" + format_perm(alpha) + " has codimension " +
                                std::to_string(codim) + " < inv " + std::to_string(inv));
    }
    if (report.test_k == curve_k) {
      const bool pattern = (inv == 0 && members == static_cast<Int>(labels.size())) ||
                           (inv == 1 && members == 1 && !has_generic) || (inv >= 2 && members == 0);
      if (!pattern) {
        report.failures.push_back("W^" + format_perm(alpha) + " has " + std::to_string(members) +
                                  " classes for inv " + std::to_string(inv));
      }
    }
  }
  return report;
}

}  // namespace tperm
