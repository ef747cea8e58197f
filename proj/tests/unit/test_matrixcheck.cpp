#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tsg/families.hpp"
#include "tsg/matrixcheck.hpp"

using namespace tsg;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("motions map to the expected matrices", "[matrixcheck]") {
  matrix4 quarter = motion_to_matrix(motion::rot(0, 1, 1, 4));
  matrix4 expect;
  expect.at(0, 0) = 1;
  expect.at(1, 1) = 1;
  expect.at(2, 3) = -1;
  expect.at(3, 2) = 1;
  CHECK(quarter.max_abs_diff(expect) < 1e-12);

  matrix4 flip = motion_to_matrix(motion::phi());
  matrix4 expect_flip;
  expect_flip.at(0, 0) = 1;
  expect_flip.at(1, 1) = -1;
  expect_flip.at(2, 2) = 1;
  expect_flip.at(3, 3) = -1;
  CHECK(flip.max_abs_diff(expect_flip) < 1e-12);

  matrix4 inv = motion_to_matrix(motion::rot(1, 2, 1, 2));
  matrix4 minus_i;
  for (int i = 0; i < 4; ++i) minus_i.at(i, i) = -1;
  CHECK(inv.max_abs_diff(minus_i) < 1e-12);
}

TEST_CASE("matrices respect the group law within tolerance", "[matrixcheck]") {
  CHECK(verify_homomorphism(build_group(family_params::g1(3, 3))) < 1e-12);
  CHECK(verify_homomorphism(build_group(family_params::j1(4, 4, 10))) < 1e-9);
  CHECK(verify_homomorphism(motion_group::generate({})) == 0.0);
}

TEST_CASE("fixed space dimension matches the symbolic fixed set", "[matrixcheck]") {
  CHECK(fixed_space_dim(motion_to_matrix(motion::rot(0, 1, 1, 5))) == 2);
  CHECK(fixed_space_dim(motion_to_matrix(motion::rot(1, 2, 1, 2))) == 0);
  CHECK(fixed_space_dim(motion_to_matrix(motion{turn::of(1, 3), turn::of(1, 4), true})) == 2);
  CHECK(fixed_space_dim(motion_to_matrix(motion::identity())) == 4);

  for (const auto& p : {family_params::g3(8, 6), family_params::j2(4, 6)}) {
    motion_group g = build_group(p);
    for (const motion& m : g.elements()) {
      int want = 0;
      switch (fix(m).k) {
        case fixed_set::kind::all: want = 4; break;
        case fixed_set::kind::empty: want = 0; break;
        default: want = 2; break;
      }
      CHECK(fixed_space_dim(motion_to_matrix(m)) == want);
    }
  }
}

TEST_CASE("angle analysis recovers rotation angles and isoclinic type", "[matrixcheck]") {
  auto left = analyze_angles(motion_to_matrix(motion::rot(1, 5, 1, 5)));
  CHECK(left.iso == isoclinic::left);
  CHECK(std::abs(std::cos(left.alpha) - std::cos(kTwoPi / 5)) < 1e-9);

  auto right = analyze_angles(motion_to_matrix(motion::rot(1, 5, 4, 5)));
  CHECK(right.iso == isoclinic::right);

  auto generic = analyze_angles(motion_to_matrix(motion::rot(1, 6, 1, 3)));
  CHECK(generic.iso == isoclinic::no);

  // angles agree with the construction up to sign and ordering
  for (const motion& m : {motion::rot(1, 6, 1, 3), motion::rot(1, 8, 3, 8),
                          motion::rot(0, 1, 1, 7), motion::rot(2, 5, 1, 2)}) {
    auto res = analyze_angles(motion_to_matrix(m));
    double ca = std::cos(kTwoPi * m.a.value()), cb = std::cos(kTwoPi * m.b.value());
    double ra = std::cos(res.alpha), rb = std::cos(res.beta);
    bool direct = std::abs(ra - ca) < 1e-9 && std::abs(rb - cb) < 1e-9;
    bool swapped = std::abs(ra - cb) < 1e-9 && std::abs(rb - ca) < 1e-9;
    CHECK((direct || swapped));
    double sa = std::abs(std::sin(kTwoPi * m.a.value())), sb = std::abs(std::sin(kTwoPi * m.b.value()));
    double qa = std::abs(std::sin(res.alpha)), qb = std::abs(std::sin(res.beta));
    bool sins = (std::abs(qa - sa) < 1e-9 && std::abs(qb - sb) < 1e-9) ||
                (std::abs(qa - sb) < 1e-9 && std::abs(qb - sa) < 1e-9);
    CHECK(sins);
  }

  // the central inversion is isoclinic of both kinds; the left label wins
  CHECK(analyze_angles(motion_to_matrix(motion::rot(1, 2, 1, 2))).iso == isoclinic::left);
}

TEST_CASE("commuting rotation pairs are simultaneously block diagonal", "[matrixcheck]") {
  motion_group g = build_group(family_params::j1(4, 4, 10));
  for (const motion& x : g.elements()) {
    if (x.flagged) continue;
    for (const motion& y : g.elements()) {
      if (y.flagged) continue;
      if (compose(x, y) != compose(y, x)) continue;
      CHECK(is_block_diagonal(motion_to_matrix(x)));
      CHECK(is_block_diagonal(motion_to_matrix(y)));
    }
  }
}
