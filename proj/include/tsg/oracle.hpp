#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsg/bipartite.hpp"
#include "tsg/classify.hpp"
#include "tsg/error.hpp"
#include "tsg/realizable.hpp"

namespace tsg {

/// Visits all 2 (n!)^2 automorphisms of K_{n,n} exactly once, in a fixed
/// order: part-preserving pairs first, then part-swapping, each in
/// lexicographic permutation order.
template <typename Fn>
void enumerate_automorphisms(int n, Fn&& visit) {
  if (n > 6) fail(errc::n_too_large, "enumeration is bounded at n = 6");
  if (n < 1) fail(errc::invalid_params, "n must be positive");
  std::vector<int> sigma(n), tau(n);
  for (int swap_parts = 0; swap_parts < 2; ++swap_parts) {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::iota(tau.begin(), tau.end(), 0);
      do {
        std::vector<int> img(2 * n);
        for (int i = 0; i < n; ++i) {
          if (swap_parts) {
            img[i] = n + sigma[i];
            img[n + i] = tau[i];
          } else {
            img[i] = sigma[i];
            img[n + i] = n + tau[i];
          }
        }
        visit(bip_automorphism::validate(n, std::move(img)));
      } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

inline std::uint64_t count_automorphisms(int n) {
  std::uint64_t c = 0;
  enumerate_automorphisms(n, [&](const bip_automorphism&) { ++c; });
  return c;
}

/// Orders m for which some automorphism of order exactly m passes the
/// nine-case test; 1 is always included (identity diffeomorphism).
inline std::set<std::int64_t> realizable_orders(int n) {
  if (n < 3) fail(errc::n_too_small, "the nine-case test requires n > 2");
  std::set<std::int64_t> out{1};
  enumerate_automorphisms(n, [&](const bip_automorphism& a) {
    if (a.is_identity()) return;
    std::int64_t r = order(a);
    if (out.count(r)) return;
    if (match_cases(a).realizable) out.insert(r);
  });
  return out;
}

struct oracle_entry {
  int n = 0;
  int m = 0;
  bool enumeration_says = false;
  bool congruence_says = false;
  std::optional<std::string> sample;  // a witness automorphism, cycle notation
};

struct oracle_report {
  std::vector<oracle_entry> entries;
  std::vector<oracle_entry> discrepancies;
};

/// Cross-checks the congruence classification against exhaustive enumeration
/// with nine-case matching, over 3 <= n <= n_max, 2 <= m <= m_max.  The two
/// sides share only the case matcher; the congruence side never enumerates
/// and the enumeration side never evaluates a congruence.
inline oracle_report crosscheck_theorem1(int n_min, int n_max, int m_min, int m_max) {
  if (n_min < 3 || n_max > 6) fail(errc::n_too_large, "n range must lie in [3, 6]");
  if (m_min < 2 || m_max > 12) fail(errc::invalid_params, "m range must lie in [2, 12]");
  oracle_report report;
  for (int n = n_min; n <= n_max; ++n) {
    // One enumeration per n, reused for every m: record a realizable sample
    // of each order.
    std::map<std::int64_t, std::string> samples;
    enumerate_automorphisms(n, [&](const bip_automorphism& a) {
      if (a.is_identity()) return;
      std::int64_t r = order(a);
      if (samples.count(r)) return;
      if (match_cases(a).realizable) samples[r] = print_cycles(a);
    });
    for (int m = m_min; m <= m_max; ++m) {
      oracle_entry e;
      e.n = n;
      e.m = m;
      e.enumeration_says = samples.count(m) > 0;
      if (e.enumeration_says) e.sample = samples[m];
      e.congruence_says =
          classify_cyclic_dihedral(n, m).contained == containment::yes;
      report.entries.push_back(e);
      if (e.enumeration_says != e.congruence_says) report.discrepancies.push_back(e);
    }
  }
  return report;
}

/// Divisor-closure diagnostic: members of realizable_orders(n) whose divisors
/// are missing.  Informational only.
inline std::vector<std::string> divisor_closure_diagnostics(int n) {
  std::vector<std::string> out;
  auto orders = realizable_orders(n);
  for (std::int64_t m : orders)
    for (std::int64_t d = 1; d <= m; ++d)
      if (m % d == 0 && !orders.count(d))
        out.push_back("n=" + std::to_string(n) + ": order " + std::to_string(m) +
                      " realizable but divisor " + std::to_string(d) + " is not");
  return out;
}

}  // namespace tsg
