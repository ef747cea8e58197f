#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "tsg/error.hpp"
#include "tsg/motion.hpp"

namespace tsg {

/// Row-major 4x4 matrix of doubles; orthogonal with determinant 1 for every
/// matrix produced here.
struct matrix4 {
  std::array<double, 16> m{};

  double& at(int r, int c) { return m[4 * r + c]; }
  double at(int r, int c) const { return m[4 * r + c]; }

  static matrix4 identity() {
    matrix4 out;
    for (int i = 0; i < 4; ++i) out.at(i, i) = 1.0;
    return out;
  }

  matrix4 operator*(const matrix4& o) const {
    matrix4 out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        double s = 0;
        for (int k = 0; k < 4; ++k) s += at(r, k) * o.at(k, c);
        out.at(r, c) = s;
      }
    return out;
  }

  double max_abs_diff(const matrix4& o) const {
    double d = 0;
    for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
    return d;
  }

  Eigen::Matrix4d eigen() const {
    Eigen::Matrix4d e;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) e(r, c) = at(r, c);
    return e;
  }
};

/// The motion as a real matrix: coordinates (x1, x2, x3, x4) with plane A the
/// first two and plane B the last two.  Unflagged motions are block rotations;
/// flagged motions compose each block with the reflection diag(1, -1), giving
/// an order-2 rotation of the whole space.
inline matrix4 motion_to_matrix(const motion& mo) {
  const double two_pi = 6.28318530717958647692528676655900577;
  double ca = std::cos(two_pi * mo.a.value()), sa = std::sin(two_pi * mo.a.value());
  double cb = std::cos(two_pi * mo.b.value()), sb = std::sin(two_pi * mo.b.value());
  matrix4 out;
  const double flip = mo.flagged ? -1.0 : 1.0;
  out.at(0, 0) = ca;
  out.at(0, 1) = -sa * flip;
  out.at(1, 0) = sa;
  out.at(1, 1) = ca * flip;
  out.at(2, 2) = cb;
  out.at(2, 3) = -sb * flip;
  out.at(3, 2) = sb;
  out.at(3, 3) = cb * flip;
  return out;
}

/// Max entrywise error of M(x y) against M(x) M(y) over all pairs.
inline double verify_homomorphism(const motion_group& g) {
  if (g.order() > 10000) fail(errc::size_bound_exceeded, "group too large for the matrix check");
  std::vector<matrix4> mats;
  mats.reserve(g.order());
  for (const motion& m : g.elements()) mats.push_back(motion_to_matrix(m));
  double worst = 0;
  const auto& els = g.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      matrix4 lhs = motion_to_matrix(compose(els[i], els[j]));
      worst = std::max(worst, lhs.max_abs_diff(mats[i] * mats[j]));
    }
  return worst;
}

/// dim ker(M - I) via singular values, with threshold 1e-7; 0 corresponds to
/// an empty fixed set on S^3, 2 to a circle, 4 to the identity.
inline int fixed_space_dim(const matrix4& m) {
  Eigen::Matrix4d a = m.eigen() - Eigen::Matrix4d::Identity();
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(a);
  const auto& sv = svd.singularValues();
  const double threshold = 1e-7;
  int dim = 0;
  for (int i = 0; i < 4; ++i) {
    double s = sv(i);
    if (s > threshold / 10 && s < threshold * 10)
      fail(errc::ambiguous_rank,
           "singular value " + std::to_string(s) + " too close to the rank threshold");
    if (s < threshold) ++dim;
  }
  return dim;
}

enum class isoclinic { no, left, right };

inline const char* to_string(isoclinic i) {
  switch (i) {
    case isoclinic::no: return "no";
    case isoclinic::left: return "left";
    case isoclinic::right: return "right";
  }
  return "?";
}

struct angle_analysis {
  double alpha = 0, beta = 0;  // rotation angles on the two invariant planes
  isoclinic iso = isoclinic::no;
};

/// Rotation angles of a special orthogonal matrix on its two invariant
/// planes, from the real Schur form, with the orientation of the Schur basis
/// normalized to determinant +1 so that the left/right isoclinic distinction
/// is well defined (and anchored to the convention of motion_to_matrix).
inline angle_analysis analyze_angles(const matrix4& m) {
  Eigen::Matrix4d a = m.eigen();
  Eigen::RealSchur<Eigen::Matrix4d> schur(a);
  Eigen::Matrix4d t = schur.matrixT();
  Eigen::Matrix4d q = schur.matrixU();

  // For an orthogonal input the quasi-triangular factor is block diagonal:
  // 2x2 rotation blocks and +-1 diagonal entries.
  std::vector<double> block_angles;
  int plus_ones = 0, minus_ones = 0;
  for (int i = 0; i < 4;) {
    if (i + 1 < 4 && std::abs(t(i + 1, i)) > 1e-9) {
      block_angles.push_back(std::atan2(t(i + 1, i), t(i, i)));
      i += 2;
    } else {
      (t(i, i) > 0 ? plus_ones : minus_ones) += 1;
      i += 1;
    }
  }
  bool fixable_by_column_swap = plus_ones + minus_ones > 0;
  while (plus_ones >= 2) {
    block_angles.push_back(0.0);
    plus_ones -= 2;
  }
  while (minus_ones >= 2) {
    block_angles.push_back(3.14159265358979323846264338327950288);
    minus_ones -= 2;
  }
  if (plus_ones + minus_ones != 0 || block_angles.size() != 2)
    fail(errc::invalid_params, "matrix is not special orthogonal");

  // det(Q) = -1 means the basis orientation is reversed; swapping the two
  // columns of a +-1 pair fixes it silently, otherwise one angle flips sign.
  if (q.determinant() < 0 && !fixable_by_column_swap) block_angles[1] = -block_angles[1];

  angle_analysis out;
  out.alpha = block_angles[0];
  out.beta = block_angles[1];
  auto circ_dist = [](double x) {
    const double two_pi = 6.28318530717958647692528676655900577;
    double d = std::fmod(std::abs(x), two_pi);
    return std::min(d, two_pi - d);
  };
  const double tol = 1e-7;
  if (circ_dist(out.alpha - out.beta) < tol)
    out.iso = isoclinic::left;
  else if (circ_dist(out.alpha + out.beta) < tol)
    out.iso = isoclinic::right;
  return out;
}

/// True when the matrix is block diagonal over the standard plane pair.
inline bool is_block_diagonal(const matrix4& m, double tol = 1e-9) {
  for (int r = 0; r < 2; ++r)
    for (int c = 2; c < 4; ++c)
      if (std::abs(m.at(r, c)) > tol || std::abs(m.at(c, r)) > tol) return false;
  return true;
}

}  // namespace tsg
