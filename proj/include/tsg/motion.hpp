#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tsg/error.hpp"
#include "tsg/turn.hpp"

namespace tsg {

// The coordinate model: S^3 sits in C^2.  Plane A is the first complex
// coordinate and meets S^3 in the circle X; plane B is the second coordinate
// and meets S^3 in Y.  An unflagged motion (a,b,0) rotates coordinate one by
// the turn a and coordinate two by b.  A flagged motion (a,b,1) additionally
// conjugates both coordinates, so it is an order-2 rotation whose axis is the
// circle spanned by the line at angle a/2 in plane A and the line at angle
// b/2 in plane B.  The plane C = span(first real axes) meets S^3 in
// Z = axis(0,0), the axis of the bare flag phi = (0,0,1).

/// Element of the generalized dihedral group over (Q/Z)^2.
struct motion {
  turn a, b;
  bool flagged = false;

  static motion rot(turn a, turn b) { return {a, b, false}; }
  static motion rot(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd,
                    bool flagged = false) {
    return {turn::of(an, ad), turn::of(bn, bd), flagged};
  }
  static motion identity() { return {}; }
  static motion phi() { return {turn{}, turn{}, true}; }

  bool is_identity() const { return !flagged && a.is_zero() && b.is_zero(); }

  friend bool operator==(const motion&, const motion&) = default;
  friend std::strong_ordering operator<=>(const motion& x, const motion& y) {
    if (auto c = x.flagged <=> y.flagged; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

/// Group law; (m1 * m2) acts as m2 first, then m1.
inline motion compose(const motion& m1, const motion& m2) {
  if (!m1.flagged) return {m1.a + m2.a, m1.b + m2.b, m2.flagged};
  return {m1.a - m2.a, m1.b - m2.b, !m2.flagged};
}

inline motion operator*(const motion& m1, const motion& m2) { return compose(m1, m2); }

inline motion inverse(const motion& m) {
  if (m.flagged) return m;  // flagged motions are involutions
  return {-m.a, -m.b, false};
}

inline std::int64_t order(const motion& m) {
  if (m.flagged) return 2;
  if (m.is_identity()) return 1;
  return lcm64(m.a.order(), m.b.order());
}

inline std::string motion_literal(const motion& m) {
  return "rot(a=" + m.a.str() + ", b=" + m.b.str() + ", phi=" + (m.flagged ? "1" : "0") + ")";
}

motion parse_motion_literal(const std::string& text);  // defined below

/// Fixed-point set of a motion on S^3.
struct fixed_set {
  enum class kind { all, empty, circle_x, circle_y, axis };
  kind k = kind::all;
  turn a, b;  // axis parameters, meaningful only for kind::axis

  static fixed_set all() { return {kind::all, {}, {}}; }
  static fixed_set empty() { return {kind::empty, {}, {}}; }
  static fixed_set circle_x() { return {kind::circle_x, {}, {}}; }
  static fixed_set circle_y() { return {kind::circle_y, {}, {}}; }
  static fixed_set axis(turn a, turn b) { return {kind::axis, a, b}; }

  bool is_circle() const { return k == kind::circle_x || k == kind::circle_y || k == kind::axis; }

  friend bool operator==(const fixed_set&, const fixed_set&) = default;
  friend std::strong_ordering operator<=>(const fixed_set&, const fixed_set&) = default;

  std::string str() const {
    switch (k) {
      case kind::all: return "all";
      case kind::empty: return "empty";
      case kind::circle_x: return "X";
      case kind::circle_y: return "Y";
      case kind::axis: return "axis(" + a.str() + ", " + b.str() + ")";
    }
    return "?";
  }
};

inline fixed_set fix(const motion& m) {
  if (m.flagged) return fixed_set::axis(m.a, m.b);
  if (m.a.is_zero() && m.b.is_zero()) return fixed_set::all();
  if (m.a.is_zero()) return fixed_set::circle_x();
  if (m.b.is_zero()) return fixed_set::circle_y();
  return fixed_set::empty();
}

/// A symbolic point of S^3, in one of four positions:
///  - on_x(t): the point of X at parameter t;
///  - on_y(t): the point of Y at parameter t;
///  - z_orbit(t, rep): rep applied to the base point of Z at parameter t,
///    where rep is the unflagged representative of its coset mod {1, phi}
///    (phi fixes Z pointwise, so cosets label orbit points faithfully).
///    The base parameter is canonicalized into (0, 1/4), which makes
///    structural equality coincide with geometric equality.
///  - free_pt(orbit, rep): a point of a free orbit; carries no coordinates,
///    only the group element moving the orbit's base point to it.
class point {
 public:
  enum class kind { on_x, on_y, z_orbit, free_orbit };

  static point on_x(turn t) { return point(kind::on_x, t, motion::identity(), 0); }
  static point on_y(turn t) { return point(kind::on_y, t, motion::identity(), 0); }

  static point z_orbit(turn t, motion rep) {
    if (rep.flagged) rep = compose(rep, motion::phi());  // strip: phi fixes the base point
    // Fold the base parameter into (0, 1/4); the sign flips move into rep.
    turn quarter = turn::of(1, 4), half = turn::of(1, 2);
    if (t.is_zero() || t == quarter || t == half || t == quarter + half)
      fail(errc::degenerate_z_base, "z base parameter " + t.str() + " lies on X or Y");
    motion adjust = motion::identity();
    if (t > half) {
      if (t - half < quarter) {  // third quadrant: z(t) = (-cos, -sin) of t - 1/2
        adjust = motion::rot(half, half);
        t = t - half;
      } else {  // fourth: z(t) = (cos, -sin) of 1 - t
        adjust = motion::rot(turn{}, half);
        t = -t;
      }
    } else if (t > quarter) {  // second: z(t) = (-cos, sin) of 1/2 - t
      adjust = motion::rot(half, turn{});
      t = half - t;
    }
    point p(kind::z_orbit, t, compose(rep, adjust), 0);
    return p;
  }

  static point free_pt(int orbit, motion rep) { return point(kind::free_orbit, turn{}, rep, orbit); }

  kind k() const { return k_; }
  turn t() const { return t_; }
  const motion& rep() const { return rep_; }
  int orbit_id() const { return orbit_; }

  friend bool operator==(const point&, const point&) = default;
  friend std::strong_ordering operator<=>(const point& p, const point& q) {
    if (auto c = p.k_ <=> q.k_; c != 0) return c;
    if (auto c = p.t_ <=> q.t_; c != 0) return c;
    if (auto c = p.orbit_ <=> q.orbit_; c != 0) return c;
    return p.rep_ <=> q.rep_;
  }

  std::string str() const {
    switch (k_) {
      case kind::on_x: return "X(" + t_.str() + ")";
      case kind::on_y: return "Y(" + t_.str() + ")";
      case kind::z_orbit: return "Z(" + t_.str() + "; " + motion_literal(rep_) + ")";
      case kind::free_orbit:
        return "free(" + std::to_string(orbit_) + "; " + motion_literal(rep_) + ")";
    }
    return "?";
  }

 private:
  point(kind k, turn t, motion rep, int orbit) : k_(k), t_(t), rep_(rep), orbit_(orbit) {}
  kind k_;
  turn t_;
  motion rep_;
  int orbit_;
};

/// Action of a motion on a placed point.
inline point act(const motion& m, const point& p) {
  switch (p.k()) {
    case point::kind::on_x:
      return point::on_x(m.flagged ? m.a - p.t() : p.t() + m.a);
    case point::kind::on_y:
      return point::on_y(m.flagged ? m.b - p.t() : p.t() + m.b);
    case point::kind::z_orbit:
      return point::z_orbit(p.t(), compose(m, p.rep()));
    case point::kind::free_orbit:
      return point::free_pt(p.orbit_id(), compose(m, p.rep()));
  }
  fail(errc::invalid_params, "unreachable point kind");
}

/// A finite set of motions closed under composition and inverse.
class motion_group {
 public:
  motion_group() = default;

  const std::vector<motion>& elements() const { return elements_; }
  const std::vector<std::pair<std::string, motion>>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const motion& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

  std::optional<motion> named(const std::string& name) const {
    for (const auto& [n, g] : generators_)
      if (n == name) return g;
    return std::nullopt;
  }

  static motion_group generate(std::vector<std::pair<std::string, motion>> gens,
                               std::size_t size_bound = 10000) {
    motion_group g;
    g.generators_ = std::move(gens);
    std::vector<motion> frontier{motion::identity()};
    std::vector<motion> seen{motion::identity()};
    auto known = [&](const motion& m) {
      return std::binary_search(seen.begin(), seen.end(), m);
    };
    while (!frontier.empty()) {
      std::vector<motion> next;
      for (const auto& m : frontier) {
        for (const auto& [name, gen] : g.generators_) {
          motion w = compose(gen, m);
          if (!known(w)) {
            seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
            next.push_back(w);
            if (seen.size() > size_bound)
              fail(errc::size_bound_exceeded,
                   "group closure exceeded " + std::to_string(size_bound) + " elements");
          }
        }
      }
      frontier = std::move(next);
    }
    g.elements_ = std::move(seen);
    return g;
  }

 private:
  std::vector<motion> elements_;  // sorted
  std::vector<std::pair<std::string, motion>> generators_;
};

inline std::vector<motion> stabilizer(const motion_group& g, const point& p) {
  std::vector<motion> out;
  for (const auto& m : g.elements())
    if (act(m, p) == p) out.push_back(m);
  return out;
}

inline std::vector<point> orbit(const motion_group& g, const point& p) {
  std::vector<point> out;
  for (const auto& m : g.elements()) out.push_back(act(m, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Circles and their rational parametrizations, used by the edge checker.
//
// X is parametrized by t -> (e^{2 pi i t}, 0), Y by t -> (0, e^{2 pi i t}).
// axis(a, b) is parametrized by theta -> (cos(2 pi theta) e^{i pi a},
// sin(2 pi theta) e^{i pi b}); its cardinal parameters 0, 1/4, 1/2, 3/4 are
// the points where it meets X and Y.

struct circle {
  enum class kind { x, y, axis };
  kind k = kind::x;
  turn a, b;

  static circle x() { return {kind::x, {}, {}}; }
  static circle y() { return {kind::y, {}, {}}; }
  static circle axis(turn a, turn b) { return {kind::axis, a, b}; }

  static std::optional<circle> of_fixed_set(const fixed_set& f) {
    switch (f.k) {
      case fixed_set::kind::circle_x: return x();
      case fixed_set::kind::circle_y: return y();
      case fixed_set::kind::axis: return axis(f.a, f.b);
      default: return std::nullopt;
    }
  }

  friend bool operator==(const circle&, const circle&) = default;
  friend std::strong_ordering operator<=>(const circle&, const circle&) = default;

  std::string str() const {
    switch (k) {
      case kind::x: return "X";
      case kind::y: return "Y";
      case kind::axis: return "axis(" + a.str() + ", " + b.str() + ")";
    }
    return "?";
  }
};

/// Parameter of p on c, when p lies on c.
inline std::optional<turn> param_on(const circle& c, const point& p) {
  const turn half = turn::of(1, 2), quarter = turn::of(1, 4);
  switch (c.k) {
    case circle::kind::x:
      if (p.k() == point::kind::on_x) return p.t();
      return std::nullopt;
    case circle::kind::y:
      if (p.k() == point::kind::on_y) return p.t();
      return std::nullopt;
    case circle::kind::axis:
      if (p.k() == point::kind::on_x) {
        if (p.t().doubled() != c.a) return std::nullopt;
        return p.t() == c.a.half() ? turn{} : half;
      }
      if (p.k() == point::kind::on_y) {
        if (p.t().doubled() != c.b) return std::nullopt;
        return p.t() == c.b.half() ? quarter : quarter + half;
      }
      if (p.k() == point::kind::z_orbit) {
        const motion& r = p.rep();
        if (r.a.doubled() != c.a || r.b.doubled() != c.b) return std::nullopt;
        bool s1 = r.a == c.a.half();  // + sign on the cosine coordinate
        bool s2 = r.b == c.b.half();
        if (s1 && s2) return p.t();
        if (s1 && !s2) return -p.t();
        if (!s1 && s2) return half - p.t();
        return half + p.t();
      }
      return std::nullopt;
  }
  return std::nullopt;
}

/// How a motion moves a circle: onto another circle, or onto itself by a
/// parameter shift t -> t + d or a parameter reflection t -> d - t.
struct circle_action {
  enum class kind { moved, shift, reflect };
  kind k = kind::moved;
  circle image;  // for moved
  turn d;        // for shift / reflect
};

inline circle image_circle(const motion& m, const circle& c) {
  switch (c.k) {
    case circle::kind::x: return circle::x();
    case circle::kind::y: return circle::y();
    case circle::kind::axis:
      if (!m.flagged) return circle::axis(c.a + m.a.doubled(), c.b + m.b.doubled());
      return circle::axis(m.a.doubled() - c.a, m.b.doubled() - c.b);
  }
  fail(errc::invalid_params, "unreachable circle kind");
}

inline circle_action action_on_circle(const motion& m, const circle& c) {
  const turn half = turn::of(1, 2);
  circle img = image_circle(m, c);
  if (img != c) return {circle_action::kind::moved, img, {}};
  switch (c.k) {
    case circle::kind::x:
      return m.flagged ? circle_action{circle_action::kind::reflect, {}, m.a}
                       : circle_action{circle_action::kind::shift, {}, m.a};
    case circle::kind::y:
      return m.flagged ? circle_action{circle_action::kind::reflect, {}, m.b}
                       : circle_action{circle_action::kind::shift, {}, m.b};
    case circle::kind::axis: {
      bool s1, s2;
      if (!m.flagged) {
        // preserved iff 2a == 0 and 2b == 0
        s1 = m.a.is_zero();
        s2 = m.b.is_zero();
      } else {
        s1 = m.a == c.a;  // vs c.a + 1/2
        s2 = m.b == c.b;
      }
      if (s1 && s2) return {circle_action::kind::shift, {}, turn{}};
      if (!s1 && !s2) return {circle_action::kind::shift, {}, half};
      if (!s1 && s2) return {circle_action::kind::reflect, {}, half};
      return {circle_action::kind::reflect, {}, turn{}};  // s1 && !s2: theta -> -theta
    }
  }
  fail(errc::invalid_params, "unreachable circle kind");
}

/// Common points of two distinct circles (at most two, always on X or Y).
inline std::vector<point> circle_intersection(const circle& c1, const circle& c2) {
  if (c1 == c2) fail(errc::invalid_params, "circle_intersection of equal circles");
  auto xs = [](turn a) {
    return std::vector<point>{point::on_x(a.half()), point::on_x(a.half() + turn::of(1, 2))};
  };
  auto ys = [](turn b) {
    return std::vector<point>{point::on_y(b.half()), point::on_y(b.half() + turn::of(1, 2))};
  };
  if (c1.k == circle::kind::x) {
    if (c2.k == circle::kind::axis) return xs(c2.a);
    return {};
  }
  if (c1.k == circle::kind::y) {
    if (c2.k == circle::kind::axis) return ys(c2.b);
    return {};
  }
  // c1 is an axis circle
  if (c2.k == circle::kind::x) return xs(c1.a);
  if (c2.k == circle::kind::y) return ys(c1.b);
  if (c1.a == c2.a) return xs(c1.a);
  if (c1.b == c2.b) return ys(c1.b);
  return {};
}

// --------------------------------------------------------------------------

inline motion parse_motion_literal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto expect = [&](std::size_t pos, const std::string& token) {
    if (s.compare(pos, token.size(), token) != 0)
      fail(errc::parse_error, "bad motion literal: " + text);
    return pos + token.size();
  };
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(errc::parse_error, "bad motion literal: " + text);
    return std::stoll(s.substr(start, pos - start));
  };
  auto read_fraction = [&](std::size_t& pos) {
    std::int64_t num = read_int(pos);
    std::int64_t den = 1;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      den = read_int(pos);
    }
    return turn::of(num, den);
  };
  std::size_t pos = expect(0, "rot(a=");
  turn a = read_fraction(pos);
  pos = expect(pos, ",b=");
  turn b = read_fraction(pos);
  pos = expect(pos, ",phi=");
  std::int64_t f = read_int(pos);
  expect(pos, ")");
  if (f != 0 && f != 1) fail(errc::parse_error, "phi flag must be 0 or 1: " + text);
  return {a, b, f == 1};
}

}  // namespace tsg
