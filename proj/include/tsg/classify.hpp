#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tsg/error.hpp"

namespace tsg {

/// One of the four decidable group families.
struct group_spec {
  enum class family { cyclic, dihedral, product, semidirect };
  family fam = family::cyclic;
  int m = 0;       // cyclic / dihedral
  int r = 0, s = 0;  // product forms, stored with r | s

  static group_spec cyclic(int m) { return {family::cyclic, m, 0, 0}; }
  static group_spec dihedral(int m) { return {family::dihedral, m, 0, 0}; }
  static group_spec product(int r, int s) { return {family::product, 0, r, s}; }
  static group_spec semidirect(int r, int s) { return {family::semidirect, 0, r, s}; }

  friend bool operator==(const group_spec&, const group_spec&) = default;
  friend auto operator<=>(const group_spec&, const group_spec&) = default;

  std::string str() const {
    switch (fam) {
      case family::cyclic: return "Z" + std::to_string(m);
      case family::dihedral: return "D" + std::to_string(m);
      case family::product: return "Z" + std::to_string(r) + "xZ" + std::to_string(s);
      case family::semidirect:
        return "(Z" + std::to_string(r) + "xZ" + std::to_string(s) + "):Z2";
    }
    return "?";
  }
};

enum class containment { yes, no };
enum class equality { yes, open, no, not_applicable };

inline const char* to_string(containment c) { return c == containment::yes ? "yes" : "no"; }
inline const char* to_string(equality e) {
  switch (e) {
    case equality::yes: return "yes";
    case equality::open: return "open";
    case equality::no: return "no";
    case equality::not_applicable: return "not_applicable";
  }
  return "?";
}

struct classification_verdict {
  containment contained = containment::no;
  equality equal = equality::no;
  std::vector<std::string> matched_conditions;
  std::string note;

  friend bool operator==(const classification_verdict&, const classification_verdict&) = default;
};

struct normalized_rs {
  int r = 0, s = 0;
  std::string note;
};

/// Rewrites (r, s) as (gcd, lcm) so that r | s; the isomorphism type of
/// Z_r x Z_s is unchanged.
inline normalized_rs normalize_rs(int r, int s) {
  if (r < 1 || s < 1) fail(errc::invalid_params, "r and s must be positive");
  normalized_rs out;
  out.r = std::gcd(r, s);
  out.s = std::lcm(r, s);
  if (out.r != r || out.s != s)
    out.note = "normalized (" + std::to_string(r) + "," + std::to_string(s) + ") to (" +
               std::to_string(out.r) + "," + std::to_string(out.s) + ")";
  if (out.r == 1) {
    if (!out.note.empty()) out.note += "; ";
    out.note += "reduces to cyclic: Z1xZs = Zs";
  }
  return out;
}

/// K_{n,n} admits an embedding with topological symmetry group exactly Z_m
/// (equivalently D_m) iff one of:
///   (C1) n = 0, 1 or 2 mod m;
///   (C2) m even and n = 0 mod m/2;
///   (C3) 4 | m and n = 2 mod m/2.
inline classification_verdict classify_cyclic_dihedral(int n, int m) {
  if (n < 3) fail(errc::n_too_small, "requires n >= 3");
  if (m < 2) fail(errc::m_too_small, "requires m >= 2");
  classification_verdict v;
  if (n % m <= 2) v.matched_conditions.push_back("C1");
  if (m % 2 == 0 && n % (m / 2) == 0) v.matched_conditions.push_back("C2");
  if (m % 4 == 0 && n % (m / 2) == 2 % (m / 2)) v.matched_conditions.push_back("C3");
  v.contained = v.matched_conditions.empty() ? containment::no : containment::yes;
  v.equal = v.contained == containment::yes ? equality::yes : equality::no;
  return v;
}

/// Containment test for Z_r x Z_s and (Z_r x Z_s) : Z_2 (r | s after
/// normalization):
///   (P1) n = 0 mod s;
///   (P2) r = 2 and n = 2 mod 2s;
///   (P3) r = 2, 4 | s and n = s+2 mod 2s;
///   (P4) r = 4 and n = 2 mod 2s.
/// Equality holds whenever containment does, except on the open ledger:
/// n = l*s with 1 <= l < 2r (both forms), (n,r,s) = (6,2,4) semidirect, and
/// (n,r,s) = (10,4,4) semidirect.
inline classification_verdict classify_product(int n, int r, int s, bool semidirect) {
  if (n < 3) fail(errc::n_too_small, "requires n >= 3");
  normalized_rs nrm = normalize_rs(r, s);
  r = nrm.r;
  s = nrm.s;

  if (r == 1) {
    // Z_1 x Z_s = Z_s; the semidirect form is the dihedral group D_s.
    if (s < 2) fail(errc::m_too_small, "trivial group is outside the decision procedures");
    classification_verdict v = classify_cyclic_dihedral(n, s);
    v.note = nrm.note + (nrm.note.empty() ? "" : "; ") +
             (semidirect ? "delegated to the dihedral test with m = s"
                         : "delegated to the cyclic test with m = s");
    return v;
  }
  if (r == 2 && s == 2) {
    if (semidirect)
      fail(errc::unsupported_group, "(Z2xZ2):Z2 is outside the decision procedures");
    classification_verdict v = classify_cyclic_dihedral(n, 2);
    v.note = nrm.note + (nrm.note.empty() ? "" : "; ") +
             "Z2xZ2 = D2: delegated to the dihedral test with m = 2";
    return v;
  }

  classification_verdict v;
  v.note = nrm.note;
  if (n % s == 0) v.matched_conditions.push_back("P1");
  if (r == 2 && n % (2 * s) == 2) v.matched_conditions.push_back("P2");
  if (r == 2 && s % 4 == 0 && n % (2 * s) == s + 2) v.matched_conditions.push_back("P3");
  if (r == 4 && n % (2 * s) == 2) v.matched_conditions.push_back("P4");
  v.contained = v.matched_conditions.empty() ? containment::no : containment::yes;

  if (v.contained == containment::no) {
    v.equal = equality::no;
    return v;
  }
  bool open = false;
  if (n % s == 0 && n / s < 2 * r) open = true;  // K_{ls,ls} with 1 <= l < 2r, both forms
  if (semidirect && n == 6 && r == 2 && s == 4) open = true;
  if (semidirect && n == 10 && r == 4 && s == 4) open = true;
  v.equal = open ? equality::open : equality::yes;
  return v;
}

/// Batch driver: all cyclic/dihedral m <= max_order and all normalized (r, s)
/// with s <= max_order, in deterministic (family, parameters) order.
inline std::vector<std::pair<group_spec, classification_verdict>> enumerate_groups(int n,
                                                                                   int max_order) {
  if (n < 3) fail(errc::n_too_small, "requires n >= 3");
  if (max_order < 2) fail(errc::m_too_small, "requires max_order >= 2");
  std::vector<std::pair<group_spec, classification_verdict>> out;
  for (int m = 2; m <= max_order; ++m)
    out.emplace_back(group_spec::cyclic(m), classify_cyclic_dihedral(n, m));
  for (int m = 2; m <= max_order; ++m)
    out.emplace_back(group_spec::dihedral(m), classify_cyclic_dihedral(n, m));
  for (int r = 2; r <= max_order; ++r) {
    for (int s = r; s <= max_order; s += r) {
      if (2 * r * s > 2 * max_order * max_order) continue;
      out.emplace_back(group_spec::product(r, s), classify_product(n, r, s, false));
      if (r == 2 && s == 2) continue;  // (Z2xZ2):Z2 is unsupported
      out.emplace_back(group_spec::semidirect(r, s), classify_product(n, r, s, true));
    }
  }
  return out;
}

}  // namespace tsg
