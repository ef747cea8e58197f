#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tsg/error.hpp"

namespace tsg {

/// A vertex of K_{n,n}: part V or W plus a 1-based index, printed "v3"/"w1".
struct vertex_id {
  enum class part { v, w };
  part p = part::v;
  int index = 1;

  static vertex_id v(int i) { return {part::v, i}; }
  static vertex_id w(int i) { return {part::w, i}; }

  friend bool operator==(const vertex_id&, const vertex_id&) = default;
  friend std::strong_ordering operator<=>(const vertex_id&, const vertex_id&) = default;

  std::string str() const { return (p == part::v ? "v" : "w") + std::to_string(index); }
};

/// Flat index: v1..vn -> 0..n-1, w1..wn -> n..2n-1.
inline int vertex_slot(const vertex_id& v, int n) {
  if (v.index < 1 || v.index > n) fail(errc::invalid_params, "vertex index out of range");
  return (v.p == vertex_id::part::v ? 0 : n) + v.index - 1;
}

inline vertex_id slot_vertex(int slot, int n) {
  return slot < n ? vertex_id::v(slot + 1) : vertex_id::w(slot - n + 1);
}

/// An automorphism of K_{n,n}: a vertex bijection that either preserves both
/// parts or swaps them (mixed behavior is not an automorphism).
class bip_automorphism {
 public:
  bip_automorphism() = default;

  /// Validates bijectivity and the all-or-nothing part behavior, and derives
  /// the swaps_parts flag.
  static bip_automorphism validate(int n, std::vector<int> image) {
    if (n < 1) fail(errc::invalid_params, "n must be positive");
    const int total = 2 * n;
    if (static_cast<int>(image.size()) != total)
      fail(errc::invalid_params, "image must cover all 2n vertices");
    std::vector<char> hit(total, 0);
    for (int x : image) {
      if (x < 0 || x >= total) fail(errc::not_bijective, "image out of range");
      if (hit[x]) fail(errc::not_bijective, "image not injective");
      hit[x] = 1;
    }
    bool first_crosses = image[0] >= n;
    for (int i = 0; i < total; ++i) {
      bool crosses = (i < n) ? (image[i] >= n) : (image[i] < n);
      if (crosses != first_crosses)
        fail(errc::mixed_action, "some vertices map within their part and others across");
    }
    bip_automorphism a;
    a.n_ = n;
    a.image_ = std::move(image);
    a.swaps_ = first_crosses;
    return a;
  }

  static bip_automorphism identity(int n) {
    std::vector<int> img(2 * n);
    std::iota(img.begin(), img.end(), 0);
    return validate(n, std::move(img));
  }

  int n() const { return n_; }
  bool swaps_parts() const { return swaps_; }
  const std::vector<int>& image() const { return image_; }

  int apply_slot(int slot) const { return image_[slot]; }
  vertex_id apply(const vertex_id& v) const {
    return slot_vertex(image_[vertex_slot(v, n_)], n_);
  }

  bool is_identity() const {
    for (int i = 0; i < 2 * n_; ++i)
      if (image_[i] != i) return false;
    return true;
  }

  friend bool operator==(const bip_automorphism&, const bip_automorphism&) = default;
  friend std::strong_ordering operator<=>(const bip_automorphism& x, const bip_automorphism& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.image_ <=> y.image_;
  }

 private:
  int n_ = 0;
  std::vector<int> image_;
  bool swaps_ = false;
};

/// (f * g)(x) = f(g(x)): right factor acts first.
inline bip_automorphism compose(const bip_automorphism& f, const bip_automorphism& g) {
  if (f.n() != g.n()) fail(errc::invalid_params, "composing automorphisms of different n");
  std::vector<int> img(2 * f.n());
  for (int i = 0; i < 2 * f.n(); ++i) img[i] = f.apply_slot(g.apply_slot(i));
  return bip_automorphism::validate(f.n(), std::move(img));
}

inline bip_automorphism operator*(const bip_automorphism& f, const bip_automorphism& g) {
  return compose(f, g);
}

inline bip_automorphism inverse(const bip_automorphism& f) {
  std::vector<int> img(2 * f.n());
  for (int i = 0; i < 2 * f.n(); ++i) img[f.apply_slot(i)] = i;
  return bip_automorphism::validate(f.n(), std::move(img));
}

/// Cycle lengths split by part content; fixed points counted separately.
struct cycle_structure {
  std::vector<int> v_cycles;      // cycles inside V, lengths >= 2, sorted
  std::vector<int> w_cycles;      // cycles inside W
  std::vector<int> mixed_cycles;  // cycles meeting both parts (always even length)
  int fixed_v = 0;
  int fixed_w = 0;

  int total(int n) const {
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    (void)n;
    return sum(v_cycles) + sum(w_cycles) + sum(mixed_cycles) + fixed_v + fixed_w;
  }

  friend bool operator==(const cycle_structure&, const cycle_structure&) = default;
};

inline cycle_structure decompose(const bip_automorphism& a) {
  const int n = a.n(), total = 2 * n;
  cycle_structure cs;
  std::vector<char> seen(total, 0);
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    int len = 0;
    bool has_v = false, has_w = false;
    int cur = start;
    do {
      seen[cur] = 1;
      (cur < n ? has_v : has_w) = true;
      cur = a.apply_slot(cur);
      ++len;
    } while (cur != start);
    if (len == 1) {
      ++(start < n ? cs.fixed_v : cs.fixed_w);
    } else if (has_v && has_w) {
      cs.mixed_cycles.push_back(len);
    } else if (has_v) {
      cs.v_cycles.push_back(len);
    } else {
      cs.w_cycles.push_back(len);
    }
  }
  std::sort(cs.v_cycles.begin(), cs.v_cycles.end());
  std::sort(cs.w_cycles.begin(), cs.w_cycles.end());
  std::sort(cs.mixed_cycles.begin(), cs.mixed_cycles.end());
  return cs;
}

inline std::int64_t order(const bip_automorphism& a) {
  cycle_structure cs = decompose(a);
  std::int64_t r = 1;
  for (int c : cs.v_cycles) r = std::lcm<std::int64_t>(r, c);
  for (int c : cs.w_cycles) r = std::lcm<std::int64_t>(r, c);
  for (int c : cs.mixed_cycles) r = std::lcm<std::int64_t>(r, c);
  return r;
}

// Cycle-notation text format: whitespace-insensitive product of parenthesized
// cycles over vertex names, e.g. "(v1 w1 v2 w2)(v3 v4)"; omitted vertices are
// fixed.  Printing is canonical: each cycle starts at its least vertex and
// cycles are ordered by first vertex; the identity prints as "()".

inline bip_automorphism parse_cycles(int n, const std::string& text) {
  std::vector<int> img(2 * n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(2 * n, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(errc::parse_error, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      char pc = text[pos];
      if (pc != 'v' && pc != 'w') fail(errc::parse_error, "expected vertex name");
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail(errc::parse_error, "expected vertex index");
      int idx = std::stoi(text.substr(start, pos - start));
      if (idx < 1 || idx > n) fail(errc::parse_error, "vertex index out of range");
      int slot = (pc == 'v' ? 0 : n) + idx - 1;
      if (used[slot]) fail(errc::parse_error, "vertex repeated: " + text.substr(start - 1, pos - start + 1));
      used[slot] = 1;
      cyc.push_back(slot);
      skip_ws();
    }
    if (pos >= text.size()) fail(errc::parse_error, "unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return bip_automorphism::validate(n, std::move(img));
}

inline std::string print_cycles(const bip_automorphism& a) {
  const int n = a.n(), total = 2 * n;
  std::string out;
  std::vector<char> seen(total, 0);
  for (int start = 0; start < total; ++start) {
    if (seen[start] || a.apply_slot(start) == start) continue;
    out += '(';
    int cur = start;
    bool first = true;
    do {
      seen[cur] = 1;
      if (!first) out += ' ';
      out += slot_vertex(cur, n).str();
      first = false;
      cur = a.apply_slot(cur);
    } while (cur != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace tsg
