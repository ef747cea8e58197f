#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tsg/bipartite.hpp"
#include "tsg/error.hpp"

namespace tsg {

/// One matched template of the nine-case realizability test.
struct case_match {
  int case_id = 0;                      // 1..9
  bool parts_swapped_for_match = false; // V and W were interchanged to fit
  std::map<std::string, int> params;    // j, k for cases 4, 5, 6

  friend bool operator==(const case_match&, const case_match&) = default;
};

struct realizability_verdict {
  bool realizable = false;
  std::vector<case_match> matches;
  std::vector<std::string> diagnostics;
};

namespace detail {

/// One part's cycle data relative to the automorphism order r: the multiset
/// of exceptional (non-r) cycle lengths plus the count of r-cycles.
struct part_view {
  std::vector<int> exceptional;  // sorted
  int r_cycles = 0;
  int fixed = 0;
};

inline part_view view_part(const std::vector<int>& cycles, int fixed, std::int64_t r) {
  part_view pv;
  pv.fixed = fixed;
  for (int c : cycles) {
    if (c == r)
      ++pv.r_cycles;
    else
      pv.exceptional.push_back(c);
  }
  return pv;
}

inline std::vector<int> distinct(const std::vector<int>& v) {
  std::vector<int> d = v;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace detail

/// Decides whether a single automorphism is induced by an orientation
/// preserving diffeomorphism of some embedding, by matching the nine
/// realizable cycle patterns.  All non-exceptional vertices must lie in
/// r-cycles, r the order of the automorphism; each pattern is matched
/// literally and exclusively, testing both part orientations.  The identity
/// is reported realizable with no pattern (trivially induced).
inline realizability_verdict match_cases(const bip_automorphism& phi) {
  if (phi.n() <= 2) fail(errc::n_too_small, "the nine-case test requires n > 2");

  realizability_verdict verdict;
  if (phi.is_identity()) {
    verdict.realizable = true;
    verdict.diagnostics.push_back(
        "identity automorphism: induced by the identity diffeomorphism; no pattern applies");
    return verdict;
  }

  const std::int64_t r = order(phi);
  const cycle_structure cs = decompose(phi);

  if (phi.swaps_parts()) {
    // Only mixed cycles exist.  Pattern (1): all r-cycles.  Pattern (9):
    // exactly one exceptional 4-cycle, everything else in r-cycles.
    detail::part_view mixed = detail::view_part(cs.mixed_cycles, 0, r);
    if (mixed.exceptional.empty()) {
      verdict.matches.push_back({1, false, {}});
    } else if (mixed.exceptional.size() == 1 && mixed.exceptional[0] == 4) {
      verdict.matches.push_back({9, false, {}});
    } else {
      verdict.diagnostics.push_back(
          "part-swapping map with exceptional cycles other than a single 4-cycle");
    }
    verdict.realizable = !verdict.matches.empty();
    return verdict;
  }

  detail::part_view v = detail::view_part(cs.v_cycles, cs.fixed_v, r);
  detail::part_view w = detail::view_part(cs.w_cycles, cs.fixed_w, r);

  // Each case is tried with P = V first, then with the parts interchanged.
  auto add = [&](int id, bool swapped, std::map<std::string, int> params = {}) {
    verdict.matches.push_back({id, swapped, std::move(params)});
  };
  auto try_oriented = [&](int id, auto&& pred) {
    if (pred(v, w)) {
      add(id, false, pred.params(v, w));
    } else if (pred(w, v)) {
      add(id, true, pred.params(w, v));
    }
  };

  struct no_params {
    std::map<std::string, int> params(const detail::part_view&, const detail::part_view&) const {
      return {};
    }
  };

  // (1) no fixed vertices or exceptional cycles
  struct c1 : no_params {
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      return p.exceptional.empty() && q.exceptional.empty() && p.fixed == 0 && q.fixed == 0;
    }
  };
  // (2) one or more fixed vertices, all in P
  struct c2 : no_params {
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      return p.exceptional.empty() && q.exceptional.empty() && p.fixed >= 1 && q.fixed == 0;
    }
  };
  // (3) at most two fixed vertices in each part (and at least one in total;
  // a pattern with no exceptions at all is case 1)
  struct c3 : no_params {
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      return p.exceptional.empty() && q.exceptional.empty() && p.fixed + q.fixed >= 1 &&
             p.fixed <= 2 && q.fixed <= 2;
    }
  };
  // (4) some j-cycles in P, j | r, j < r
  struct c4 {
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      if (p.fixed || q.fixed || !q.exceptional.empty() || p.exceptional.empty()) return false;
      auto d = detail::distinct(p.exceptional);
      return d.size() == 1 && d[0] >= 2;  // j | r holds automatically: r = lcm of lengths
    }
    std::map<std::string, int> params(const detail::part_view& p,
                                      const detail::part_view&) const {
      return {{"j", p.exceptional[0]}};
    }
  };
  // (5) some j-cycles and k-cycles in P with r = lcm(j, k)
  struct c5 {
    std::int64_t r;
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      if (p.fixed || q.fixed || !q.exceptional.empty()) return false;
      auto d = detail::distinct(p.exceptional);
      return d.size() == 2 && d[0] >= 2 && std::lcm<std::int64_t>(d[0], d[1]) == r;
    }
    std::map<std::string, int> params(const detail::part_view& p,
                                      const detail::part_view&) const {
      auto d = detail::distinct(p.exceptional);
      return {{"j", d[0]}, {"k", d[1]}};
    }
  };
  // (6) some j-cycles in P and k-cycles in Q with r = lcm(j, k)
  struct c6 {
    std::int64_t r;
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      if (p.fixed || q.fixed || p.exceptional.empty() || q.exceptional.empty()) return false;
      auto dp = detail::distinct(p.exceptional), dq = detail::distinct(q.exceptional);
      return dp.size() == 1 && dq.size() == 1 && dp[0] >= 2 && dq[0] >= 2 &&
             std::lcm<std::int64_t>(dp[0], dq[0]) == r;
    }
    std::map<std::string, int> params(const detail::part_view& p,
                                      const detail::part_view& q) const {
      return {{"j", p.exceptional[0]}, {"k", q.exceptional[0]}};
    }
  };
  // (7) exactly one 2-cycle in each part
  struct c7 : no_params {
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      return p.fixed == 0 && q.fixed == 0 && p.exceptional == std::vector<int>{2} &&
             q.exceptional == std::vector<int>{2};
    }
  };
  // (8) r/2 odd, one 2-cycle in each part, plus some (r/2)-cycles in P
  struct c8 : no_params {
    std::int64_t r;
    bool operator()(const detail::part_view& p, const detail::part_view& q) const {
      if (r % 2 != 0 || (r / 2) % 2 == 0) return false;
      if (p.fixed || q.fixed) return false;
      if (q.exceptional != std::vector<int>{2}) return false;
      if (p.exceptional.size() < 2 || p.exceptional[0] != 2) return false;
      return std::all_of(p.exceptional.begin() + 1, p.exceptional.end(),
                         [&](int c) { return c == r / 2; });
    }
  };

  try_oriented(1, c1{});
  try_oriented(2, c2{});
  try_oriented(3, c3{});
  try_oriented(4, c4{});
  try_oriented(5, c5{r});
  try_oriented(6, c6{r});
  try_oriented(7, c7{});
  try_oriented(8, c8{{}, r});

  if (verdict.matches.empty()) {
    bool has_fixed = cs.fixed_v + cs.fixed_w > 0;
    bool has_exc = !v.exceptional.empty() || !w.exceptional.empty();
    if (has_fixed && has_exc)
      verdict.diagnostics.push_back(
          "fixed vertices combined with exceptional cycles match none of the nine patterns");
    else if (has_fixed)
      verdict.diagnostics.push_back("fixed-vertex counts exceed every listed pattern");
    else if (has_exc)
      verdict.diagnostics.push_back("exceptional cycle lengths fit no listed pattern");
  }
  verdict.realizable = !verdict.matches.empty();
  return verdict;
}

}  // namespace tsg
