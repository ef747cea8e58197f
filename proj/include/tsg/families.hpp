#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsg/bipartite.hpp"
#include "tsg/classify.hpp"
#include "tsg/error.hpp"
#include "tsg/motion.hpp"

namespace tsg {

enum class family_kind { g1, g2, g3, j1, j2 };

inline const char* family_name(family_kind f) {
  switch (f) {
    case family_kind::g1: return "G1";
    case family_kind::g2: return "G2";
    case family_kind::g3: return "G3";
    case family_kind::j1: return "J1";
    case family_kind::j2: return "J2";
  }
  return "?";
}

/// Parameters of one of the five named actions on K_{n,n}.
///   G1(m): rotation of order m about plane A together with the axis flip;
///   G2(m), m even: glide rotation (2/m, 1/m about A/B) with the flip;
///   G3(m), 4 | m: glide rotation (quarter turn about A, 1/m about B);
///   J1(r, s), r | s: independent rotations about A and B with the flip;
///   J2(s), 4 | s: order-2 rotation about A and a glide of order s.
struct family_params {
  family_kind fam = family_kind::g1;
  int m = 0;  // G1, G2, G3
  int r = 0, s = 0;  // J1; J2 uses s only
  int n = 0;

  static family_params g1(int m, int n) { return {family_kind::g1, m, 0, 0, n}; }
  static family_params g2(int m, int n) { return {family_kind::g2, m, 0, 0, n}; }
  static family_params g3(int m, int n) { return {family_kind::g3, m, 0, 0, n}; }
  static family_params j1(int r, int s, int n) { return {family_kind::j1, 0, r, s, n}; }
  static family_params j2(int s, int n) { return {family_kind::j2, 0, 2, s, n}; }

  std::string str() const {
    std::string p = family_name(fam);
    switch (fam) {
      case family_kind::g1:
      case family_kind::g2:
      case family_kind::g3: return p + "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
      case family_kind::j1:
        return p + "(r=" + std::to_string(r) + ", s=" + std::to_string(s) +
               ", n=" + std::to_string(n) + ")";
      case family_kind::j2:
        return p + "(s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")";
    }
    return p;
  }
};

namespace detail {

inline void check_family_params(const family_params& p) {
  if (p.n < 3) fail(errc::n_too_small, "placements require n >= 3");
  switch (p.fam) {
    case family_kind::g1:
      if (p.m < 2) fail(errc::invalid_params, "G1 requires m >= 2");
      break;
    case family_kind::g2:
      if (p.m < 2 || p.m % 2 != 0) fail(errc::invalid_params, "G2 requires even m >= 2");
      break;
    case family_kind::g3:
      if (p.m % 4 != 0) fail(errc::invalid_params, "G3 requires 4 | m");
      break;
    case family_kind::j1:
      if (p.r < 2 || p.s % p.r != 0) fail(errc::invalid_params, "J1 requires 2 <= r and r | s");
      break;
    case family_kind::j2:
      if (p.s % 4 != 0) fail(errc::invalid_params, "J2 requires 4 | s");
      break;
  }
}

}  // namespace detail

/// The group of motions for a family, with named generators.  Generator
/// orders and the defining relations are verified on construction.
inline motion_group build_group(const family_params& p) {
  detail::check_family_params(p);
  std::vector<std::pair<std::string, motion>> gens;
  std::size_t expected = 0;
  switch (p.fam) {
    case family_kind::g1:
      gens = {{"g", motion::rot(0, 1, 1, p.m)}, {"phi", motion::phi()}};
      expected = 2 * p.m;
      break;
    case family_kind::g2:
      gens = {{"h", motion::rot(1, p.m, 2, p.m)}, {"phi", motion::phi()}};
      expected = 2 * p.m;
      break;
    case family_kind::g3:
      gens = {{"j", motion::rot(1, p.m, 1, 4)}, {"phi", motion::phi()}};
      expected = 2 * p.m;
      break;
    case family_kind::j1:
      gens = {{"g", motion::rot(0, 1, 1, p.r)},
              {"h", motion::rot(1, p.s, 0, 1)},
              {"phi", motion::phi()}};
      expected = 2ull * p.r * p.s;
      break;
    case family_kind::j2:
      gens = {{"g", motion::rot(0, 1, 1, 2)},
              {"h", motion::rot(1, p.s, 1, 4)},
              {"phi", motion::phi()}};
      expected = 4ull * p.s;
      break;
  }
  motion_group g = motion_group::generate(gens);
  if (g.order() != expected)
    fail(errc::invalid_params, p.str() + ": closure order " + std::to_string(g.order()) +
                                   " does not match expected " + std::to_string(expected));
  // Presentation relations.
  const motion flip = *g.named("phi");
  if (order(flip) != 2) fail(errc::invalid_params, "phi must have order 2");
  for (const auto& [name, gen] : g.generators()) {
    if (name == "phi") continue;
    std::int64_t want = (p.fam == family_kind::j1 && name == "g")   ? p.r
                        : (p.fam == family_kind::j1 && name == "h") ? p.s
                        : (p.fam == family_kind::j2 && name == "g") ? 2
                        : (p.fam == family_kind::j2 && name == "h") ? p.s
                                                                    : p.m;
    if (order(gen) != want)
      fail(errc::invalid_params, p.str() + ": generator " + name + " has order " +
                                     std::to_string(order(gen)) + ", expected " +
                                     std::to_string(want));
  }
  for (const motion& x : g.elements()) {
    if (x.flagged) continue;
    if (compose(flip, compose(x, flip)) != inverse(x))
      fail(errc::invalid_params, "conjugation by phi must invert rotations");
  }
  if (p.fam == family_kind::j1 || p.fam == family_kind::j2) {
    motion a = *g.named("g"), b = *g.named("h");
    if (compose(a, b) != compose(b, a)) fail(errc::invalid_params, "g and h must commute");
  }
  return g;
}

/// An equivariant embedding of the 2n vertices: point assignments indexed by
/// vertex slot (v1..vn, then w1..wn); the set of points is invariant under
/// the group and each part has exactly n vertices.
struct placement {
  family_params params;
  motion_group group;
  std::vector<point> points;  // slot-indexed, size 2n

  int n() const { return params.n; }

  const point& at(const vertex_id& v) const { return points[vertex_slot(v, n())]; }

  /// Slot of the vertex sitting at a point.
  std::optional<int> slot_at(const point& p) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == p) return static_cast<int>(i);
    return std::nullopt;
  }
};

namespace detail {

struct placement_builder {
  std::vector<point> v, w;

  void to_v(point p) { v.push_back(std::move(p)); }
  void to_w(point p) { w.push_back(std::move(p)); }

  std::vector<point> finish(int n) {
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
      fail(errc::placement_degenerate,
           "part counts " + std::to_string(v.size()) + "/" + std::to_string(w.size()) +
               " do not match n = " + std::to_string(n));
    std::vector<point> all = v;
    all.insert(all.end(), w.begin(), w.end());
    return all;
  }
};

/// Base parameter for points on Z, drawn from the candidate sequence
/// (2c+1) / (8 lcm(4, |G|)); genericity is validated by the caller.
inline turn z_candidate(const motion_group& g, int c) {
  return turn::of(2 * c + 1, 8 * lcm64(4, static_cast<std::int64_t>(g.order())));
}

inline void validate_placement(const placement& pl) {
  std::vector<point> sorted = pl.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(errc::placement_degenerate, "placed vertices are not pairwise distinct");
  for (const motion& m : pl.group.elements())
    for (const point& p : pl.points)
      if (!std::binary_search(sorted.begin(), sorted.end(), act(m, p)))
        fail(errc::placement_degenerate, "vertex set is not invariant under the group");
}

/// The orbit of a candidate X- or Y-point must be free of flagged fixed
/// points and disjoint from previously chosen orbits.
inline bool x_or_y_orbit_ok(const motion_group& g, const point& base,
                            std::size_t expected_stab, const std::vector<point>& taken) {
  if (stabilizer(g, base).size() != expected_stab) return false;
  for (const motion& m : g.elements()) {
    point q = act(m, base);
    if (std::find(taken.begin(), taken.end(), q) != taken.end()) return false;
  }
  return true;
}

}  // namespace detail

/// Builds the vertex placement realizing the family's action on K_{n,n}.
/// The recipe is selected by the congruence class of n.
inline placement build_placement(const family_params& p) {
  detail::check_family_params(p);
  placement pl;
  pl.params = p;
  pl.group = build_group(p);
  const motion_group& G = pl.group;
  const motion flip = motion::phi();
  detail::placement_builder out;

  auto z_base = [&](int needed_orbit_size) {
    for (int c = 0; c < 64; ++c) {
      turn t = detail::z_candidate(G, c);
      point q = point::z_orbit(t, motion::identity());
      if (static_cast<int>(orbit(G, q).size()) != needed_orbit_size) continue;
      return t;
    }
    fail(errc::placement_degenerate, "no generic base point found on Z");
  };

  switch (p.fam) {
    case family_kind::g1: {
      const int m = p.m;
      const int eps = p.n % m;
      if (eps > 2) fail(errc::congruence_mismatch, p.str() + ": n must be 0, 1 or 2 mod m");
      const int k = (p.n - eps) / m;
      const motion g = *G.named("g");
      for (int j = 0; j < k; ++j) {
        motion gi = motion::identity();
        for (int i = 0; i < m; ++i, gi = compose(g, gi)) {
          out.to_v(point::free_pt(j, gi));
          out.to_w(point::free_pt(j, compose(flip, gi)));
        }
      }
      // Leftover vertices go on X, alternating parts, with the flip pairing
      // v_i with w_i.
      if (eps >= 1) {
        out.to_v(point::on_x(turn::of(1, 8)));
        out.to_w(point::on_x(turn::of(7, 8)));
      }
      if (eps == 2) {
        out.to_v(point::on_x(turn::of(5, 8)));
        out.to_w(point::on_x(turn::of(3, 8)));
      }
      break;
    }
    case family_kind::g2:
    case family_kind::g3: {
      const int m = p.m;
      const int half = m / 2;
      const int extra = p.fam == family_kind::g3 ? 2 : 0;
      if (p.n % m != (half + extra) % m)
        fail(errc::congruence_mismatch,
             p.str() + ": n must be " + std::to_string(half + extra) + " mod m");
      const int k = (p.n - half - extra) / m;
      const motion h = p.fam == family_kind::g2 ? *G.named("h") : *G.named("j");
      // Free orbits: even powers of the glide land in V, odd powers in W.
      for (int j = 0; j < k; ++j) {
        motion hi = motion::identity();
        for (int i = 0; i < m; ++i, hi = compose(h, hi)) {
          auto& side = (i % 2 == 0) ? out.v : out.w;
          side.push_back(point::free_pt(j, hi));
          side.push_back(point::free_pt(j, compose(flip, hi)));
        }
      }
      // An m-point orbit on Z, alternating parts along the glide.
      turn t = z_base(m);
      motion hi = motion::identity();
      for (int i = 0; i < m; ++i, hi = compose(h, hi)) {
        point q = point::z_orbit(t, hi);
        (i % 2 == 0 ? out.v : out.w).push_back(q);
      }
      // G3 places the last four vertices where Y meets the flip axes.
      if (p.fam == family_kind::g3) {
        out.to_v(point::on_y(turn{}));
        out.to_v(point::on_y(turn::of(1, 2)));
        out.to_w(point::on_y(turn::of(1, 4)));
        out.to_w(point::on_y(turn::of(3, 4)));
      }
      break;
    }
    case family_kind::j1: {
      const int r = p.r, s = p.s;
      if (p.n % s == 0) {
        // n = 2krs + ls with 0 <= l < 2r: full free orbits plus X- and
        // Y-orbits for the remainder.
        const int l = (p.n / s) % (2 * r);
        const int k = (p.n - l * s) / (2 * r * s);
        for (int j = 0; j < k; ++j)
          for (const motion& mm : G.elements()) {
            out.to_v(point::free_pt(j, mm));
            out.to_w(point::free_pt(k + j, mm));
          }
        const int mt = s / r;
        auto add_x_orbits = [&](int count, std::vector<point>& taken) {
          for (int c = 0, placed = 0; placed < count; ++c) {
            if (c >= 64) fail(errc::placement_degenerate, "no generic X points left");
            point base = point::on_x(turn::of(2 * c + 1, 8 * s));
            if (!detail::x_or_y_orbit_ok(G, base, r, taken)) continue;
            for (const motion& mm : G.elements()) {
              point q = act(mm, base);
              if (std::find(taken.begin(), taken.end(), q) == taken.end()) {
                taken.push_back(q);
                out.to_v(q);
              }
            }
            ++placed;
          }
        };
        auto add_y_orbits = [&](int count, std::vector<point>& taken) {
          for (int c = 0, placed = 0; placed < count; ++c) {
            if (c >= 64) fail(errc::placement_degenerate, "no generic Y points left");
            point base = point::on_y(turn::of(2 * c + 1, 8 * r));
            if (!detail::x_or_y_orbit_ok(G, base, s, taken)) continue;
            for (const motion& mm : G.elements()) {
              point q = act(mm, base);
              if (std::find(taken.begin(), taken.end(), q) == taken.end()) {
                taken.push_back(q);
                out.to_w(q);
              }
            }
            ++placed;
          }
        };
        std::vector<point> taken_x, taken_y;
        if (l % 2 == 0) {
          add_x_orbits(l / 2, taken_x);
          add_y_orbits(l * mt / 2, taken_y);
        } else {
          add_x_orbits((l - 1) / 2, taken_x);
          // The s-point orbit through X meets Z; its points are x-parameters
          // j/s.
          for (int j = 0; j < s; ++j) out.to_v(point::on_x(turn::of(j, s)));
          add_y_orbits((l - 1) * mt / 2, taken_y);
          if (mt % 2 == 0) {
            add_y_orbits(mt / 2, taken_y);
          } else {
            add_y_orbits((mt - 1) / 2, taken_y);
            for (int j = 0; j < r; ++j) out.to_w(point::on_y(turn::of(j, r)));
          }
        }
      } else if (p.n % (2 * s) == 2 && r == 2) {
        // n = 2ks + 2: free orbits split by the flip, plus four vertices on Y
        // which the flip pairs crosswise.
        const int k = (p.n - 2) / (2 * s);
        for (int j = 0; j < k; ++j)
          for (const motion& mm : G.elements())
            (mm.flagged ? out.w : out.v).push_back(point::free_pt(j, mm));
        out.to_v(point::on_y(turn::of(1, 8)));
        out.to_v(point::on_y(turn::of(5, 8)));
        out.to_w(point::on_y(turn::of(3, 8)));
        out.to_w(point::on_y(turn::of(7, 8)));
      } else if (p.n % (2 * s) == 2 && r == 4) {
        // n = 4ks + 2 or 4ks + 2s + 2: the order-4 rotation about A
        // interchanges the parts; its exponent parity splits every orbit.
        const bool extra_z = p.n % (4 * s) != 2;
        const int k = (p.n - (extra_z ? 2 * s + 2 : 2)) / (4 * s);
        auto g_parity_even = [&](const motion& mm) {
          // exponent of the order-4 generator about A, read off coordinate b
          return mm.b.is_zero() || mm.b.is_half();
        };
        for (int j = 0; j < k; ++j)
          for (const motion& mm : G.elements())
            (g_parity_even(mm) ? out.v : out.w).push_back(point::free_pt(j, mm));
        out.to_v(point::on_y(turn{}));
        out.to_v(point::on_y(turn::of(1, 2)));
        out.to_w(point::on_y(turn::of(1, 4)));
        out.to_w(point::on_y(turn::of(3, 4)));
        if (extra_z) {
          turn t = z_base(4 * s);
          for (const motion& mm : G.elements()) {
            if (mm.flagged) continue;
            (g_parity_even(mm) ? out.v : out.w).push_back(point::z_orbit(t, mm));
          }
        }
      } else {
        fail(errc::congruence_mismatch,
             p.str() + ": n fits no J1 recipe (0 mod s, or 2 mod 2s with r = 2 or 4)");
      }
      break;
    }
    case family_kind::j2: {
      const int s = p.s;
      if (p.n % (2 * s) != (s + 2) % (2 * s))
        fail(errc::congruence_mismatch, p.str() + ": n must be s + 2 mod 2s");
      const int k = (p.n - s - 2) / (2 * s);
      auto h_parity_even = [&](const motion& mm) {
        // exponent of the glide h, read off coordinate a = (h-exponent)/s
        return (mm.a.num() * (s / mm.a.den())) % 2 == 0;
      };
      for (int j = 0; j < k; ++j)
        for (const motion& mm : G.elements())
          (h_parity_even(mm) ? out.v : out.w).push_back(point::free_pt(j, mm));
      out.to_v(point::on_y(turn{}));
      out.to_v(point::on_y(turn::of(1, 2)));
      out.to_w(point::on_y(turn::of(1, 4)));
      out.to_w(point::on_y(turn::of(3, 4)));
      turn t = z_base(2 * s);
      for (const motion& mm : G.elements()) {
        if (mm.flagged) continue;
        (h_parity_even(mm) ? out.v : out.w).push_back(point::z_orbit(t, mm));
      }
      break;
    }
  }

  pl.points = out.finish(p.n);
  detail::validate_placement(pl);
  return pl;
}

/// The vertex permutation each motion induces, as a validated automorphism,
/// plus the structural checks that pin the abstract isomorphism type.
struct induced_action {
  std::vector<bip_automorphism> images;  // parallel to group.elements()
  bool faithful = false;
  bool homomorphism_ok = false;
  bool relations_ok = false;
  std::string iso_type;

  const bip_automorphism& of(const motion_group& g, const motion& m) const {
    const auto& els = g.elements();
    auto it = std::lower_bound(els.begin(), els.end(), m);
    if (it == els.end() || *it != m) fail(errc::invalid_params, "motion not in group");
    return images[static_cast<std::size_t>(it - els.begin())];
  }
};

inline induced_action induce(const placement& pl) {
  const int n = pl.n();
  induced_action act_out;
  for (const motion& m : pl.group.elements()) {
    std::vector<int> img(2 * n);
    for (int slot = 0; slot < 2 * n; ++slot) {
      point q = act(m, pl.points[slot]);
      auto target = pl.slot_at(q);
      if (!target) fail(errc::not_automorphism, "motion moves a vertex off the vertex set");
      img[slot] = *target;
    }
    bip_automorphism a = [&] {
      try {
        return bip_automorphism::validate(n, std::move(img));
      } catch (const error& e) {
        if (e.code() == errc::mixed_action)
          fail(errc::not_automorphism, std::string("induced permutation is mixed: ") + e.what());
        throw;
      }
    }();
    act_out.images.push_back(std::move(a));
  }

  // Faithful: distinct motions induce distinct automorphisms.
  std::vector<bip_automorphism> sorted = act_out.images;
  std::sort(sorted.begin(), sorted.end());
  act_out.faithful =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!act_out.faithful) fail(errc::not_faithful, pl.params.str() + ": induced action not faithful");

  // Homomorphism: image of a product is the product of images.
  act_out.homomorphism_ok = true;
  const auto& els = pl.group.elements();
  for (std::size_t i = 0; i < els.size() && act_out.homomorphism_ok; ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      motion prod = compose(els[i], els[j]);
      if (act_out.of(pl.group, prod) !=
          compose(act_out.images[i], act_out.images[j])) {
        act_out.homomorphism_ok = false;
        break;
      }
    }

  // Relations of the target presentation, evaluated on the induced images.
  const family_params& p = pl.params;
  auto im = [&](const char* name) { return act_out.of(pl.group, *pl.group.named(name)); };
  bip_automorphism f = im("phi");
  bool rel = order(f) == 2;
  auto inverts = [&](const bip_automorphism& x) { return f * x * f == inverse(x); };
  switch (p.fam) {
    case family_kind::g1: rel = rel && order(im("g")) == p.m && inverts(im("g")); break;
    case family_kind::g2: rel = rel && order(im("h")) == p.m && inverts(im("h")); break;
    case family_kind::g3: rel = rel && order(im("j")) == p.m && inverts(im("j")); break;
    case family_kind::j1:
    case family_kind::j2: {
      bip_automorphism a = im("g"), b = im("h");
      int r_want = p.fam == family_kind::j1 ? p.r : 2;
      rel = rel && order(a) == r_want && order(b) == p.s && a * b == b * a && inverts(a) &&
            inverts(b);
      // trivial intersection of <g> and <h> pins Z_r x Z_s
      std::vector<bip_automorphism> pow_a{bip_automorphism::identity(n)};
      for (bip_automorphism x = a; !x.is_identity(); x = x * a) pow_a.push_back(x);
      for (bip_automorphism x = b; !x.is_identity(); x = x * b)
        rel = rel && std::find(pow_a.begin(), pow_a.end(), x) == pow_a.end();
      break;
    }
  }
  act_out.relations_ok = rel;

  switch (p.fam) {
    case family_kind::g1:
    case family_kind::g2:
    case family_kind::g3: act_out.iso_type = "D" + std::to_string(p.m); break;
    case family_kind::j1:
      act_out.iso_type =
          "(Z" + std::to_string(p.r) + "xZ" + std::to_string(p.s) + "):Z2";
      break;
    case family_kind::j2:
      act_out.iso_type = "(Z2xZ" + std::to_string(p.s) + "):Z2";
      break;
  }
  return act_out;
}

}  // namespace tsg
