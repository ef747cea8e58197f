#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "tsg/families.hpp"

using namespace tsg;

namespace {

const std::vector<family_params> kGrid = {
    family_params::g1(3, 3),     family_params::g1(4, 5),  family_params::g1(2, 4),
    family_params::g1(5, 7),     family_params::g2(4, 6),  family_params::g2(6, 3),
    family_params::g3(8, 6),     family_params::j1(2, 4, 8), family_params::j1(2, 4, 10),
    family_params::j1(4, 4, 10), family_params::j2(4, 6),
};

std::size_t expected_order(const family_params& p) {
  switch (p.fam) {
    case family_kind::g1:
    case family_kind::g2:
    case family_kind::g3: return 2 * p.m;
    case family_kind::j1: return 2 * p.r * p.s;
    case family_kind::j2: return 4 * p.s;
  }
  return 0;
}

}  // namespace

TEST_CASE("groups close to the advertised orders with verified relations", "[families]") {
  CHECK(build_group(family_params::g1(3, 3)).order() == 6);
  CHECK(build_group(family_params::j2(4, 6)).order() == 16);
  auto g3 = build_group(family_params::g3(8, 6));
  CHECK(g3.order() == 16);
  // the fourth power of the G3 glide is the half-turn fixing Y
  motion j = *g3.named("j");
  motion j4 = compose(j, compose(j, compose(j, j)));
  CHECK(j4 == motion::rot(1, 2, 0, 1));
  CHECK(fix(j4) == fixed_set::circle_y());

  for (const auto& p : kGrid) CHECK(build_group(p).order() == expected_order(p));

  CHECK_THROWS_AS(build_group(family_params::g2(5, 3)), error);
  CHECK_THROWS_AS(build_group(family_params::g3(6, 5)), error);
  CHECK_THROWS_AS(build_group(family_params::j1(3, 4, 4)), error);
  CHECK_THROWS_AS(build_group(family_params::j2(6, 8)), error);
}

TEST_CASE("grid placements satisfy the placement invariants", "[families]") {
  for (const auto& p : kGrid) {
    INFO(p.str());
    placement pl = build_placement(p);
    CHECK(pl.points.size() == 2u * p.n);
    // distinctness and invariance are validated on construction; check the
    // part sizes and that every motion permutes the slots
    std::set<point> all(pl.points.begin(), pl.points.end());
    CHECK(all.size() == 2u * p.n);
    for (const motion& m : pl.group.elements())
      for (const point& q : pl.points) CHECK(all.count(act(m, q)) == 1);
  }
}

TEST_CASE("congruence mismatches are rejected", "[families]") {
  CHECK_THROWS_AS(build_placement(family_params::g1(4, 7)), error);   // 7 = 3 mod 4
  CHECK_THROWS_AS(build_placement(family_params::g2(6, 4)), error);   // 4 != 3 mod 6
  CHECK_THROWS_AS(build_placement(family_params::g3(8, 5)), error);   // 5 != 6 mod 8
  CHECK_THROWS_AS(build_placement(family_params::j1(2, 4, 5)), error);
  CHECK_THROWS_AS(build_placement(family_params::j2(4, 7)), error);
}

TEST_CASE("the G1 placement pins the axis vertices stated by the recipe", "[families]") {
  placement pl = build_placement(family_params::g1(4, 5));
  // 8 free-orbit vertices plus v5 = X(1/8), w5 = X(7/8)
  CHECK(pl.at(vertex_id::v(5)) == point::on_x(turn::of(1, 8)));
  CHECK(pl.at(vertex_id::w(5)) == point::on_x(turn::of(7, 8)));
  int free_count = 0;
  for (const point& q : pl.points) free_count += q.k() == point::kind::free_orbit;
  CHECK(free_count == 8);

  // the flip pairs v_i with w_i on the axis circle
  motion f = motion::phi();
  CHECK(act(f, pl.at(vertex_id::v(5))) == pl.at(vertex_id::w(5)));

  placement pl2 = build_placement(family_params::g1(5, 7));
  CHECK(act(f, pl2.at(vertex_id::v(6))) == pl2.at(vertex_id::w(6)));
  CHECK(act(f, pl2.at(vertex_id::v(7))) == pl2.at(vertex_id::w(7)));
}

TEST_CASE("the G2 placement alternates parts along the glide orbit on Z", "[families]") {
  placement pl = build_placement(family_params::g2(6, 3));
  motion h = *pl.group.named("h");
  for (const point& q : pl.points) CHECK(q.k() == point::kind::z_orbit);
  // h maps each V vertex to a W vertex and conversely
  for (int i = 0; i < 3; ++i) {
    point img = act(h, pl.at(vertex_id::v(i + 1)));
    auto slot = pl.slot_at(img);
    REQUIRE(slot.has_value());
    CHECK(*slot >= 3);  // landed in W
  }
}

TEST_CASE("stabilizers match the recipes", "[families]") {
  // free-orbit vertices have trivial stabilizer
  placement g1 = build_placement(family_params::g1(3, 3));
  CHECK(stabilizer(g1.group, g1.at(vertex_id::v(1))).size() == 1);

  // X vertices under G1 are stabilized by the full rotation subgroup
  placement g1e = build_placement(family_params::g1(4, 5));
  CHECK(stabilizer(g1e.group, g1e.at(vertex_id::v(5))).size() == 4);

  // Z vertices under G2 are stabilized by the flip coset pair
  placement g2 = build_placement(family_params::g2(6, 3));
  auto stab = stabilizer(g2.group, g2.at(vertex_id::v(1)));
  REQUIRE(stab.size() == 2);
  CHECK(stab[0] == motion::identity());
  CHECK(stab[1] == motion::phi());

  // orbit-stabilizer over every placed vertex of every grid case
  for (const auto& p : kGrid) {
    placement pl = build_placement(p);
    for (const point& q : pl.points)
      CHECK(orbit(pl.group, q).size() * stabilizer(pl.group, q).size() == pl.group.order());
  }
}

TEST_CASE("induced actions are faithful automorphism groups of the right type", "[families]") {
  for (const auto& p : kGrid) {
    INFO(p.str());
    placement pl = build_placement(p);
    induced_action ia = induce(pl);
    CHECK(ia.faithful);
    CHECK(ia.homomorphism_ok);
    CHECK(ia.relations_ok);
    std::set<bip_automorphism> distinct(ia.images.begin(), ia.images.end());
    CHECK(distinct.size() == pl.group.order());
  }
}

TEST_CASE("G1 generators induce the expected cycle shapes", "[families]") {
  placement pl = build_placement(family_params::g1(3, 3));
  induced_action ia = induce(pl);
  auto g = ia.of(pl.group, *pl.group.named("g"));
  CHECK(!g.swaps_parts());
  auto cs = decompose(g);
  CHECK(cs.v_cycles == std::vector<int>{3});
  CHECK(cs.w_cycles == std::vector<int>{3});

  auto f = ia.of(pl.group, motion::phi());
  CHECK(f.swaps_parts());
  CHECK(order(f) == 2);
}

TEST_CASE("G2 glide induces one long alternating cycle", "[families]") {
  placement pl = build_placement(family_params::g2(6, 3));
  induced_action ia = induce(pl);
  auto h = ia.of(pl.group, *pl.group.named("h"));
  CHECK(h.swaps_parts());
  CHECK(decompose(h).mixed_cycles == std::vector<int>{6});
}

TEST_CASE("J1 r=4 variant swaps parts with g and preserves them with h", "[families]") {
  placement pl = build_placement(family_params::j1(4, 4, 10));
  induced_action ia = induce(pl);
  CHECK(ia.of(pl.group, *pl.group.named("g")).swaps_parts());
  CHECK(!ia.of(pl.group, *pl.group.named("h")).swaps_parts());
  CHECK(!ia.of(pl.group, motion::phi()).swaps_parts());
}

TEST_CASE("commuting motions satisfy the orbit-transport property", "[families]") {
  // a commuting pair's induced automorphisms carry each other's orbits to
  // orbits of the same length
  for (const auto& p : kGrid) {
    placement pl = build_placement(p);
    induced_action ia = induce(pl);
    const auto& els = pl.group.elements();
    const int total = 2 * p.n;
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (compose(els[i], els[j]) != compose(els[j], els[i])) continue;
        const auto& alpha = ia.images[i];
        const auto& beta = ia.images[j];
        // orbits of alpha as sorted slot lists
        std::vector<int> orbit_of(total, -1);
        std::vector<std::vector<int>> orbits;
        for (int s = 0; s < total; ++s) {
          if (orbit_of[s] >= 0) continue;
          int id = static_cast<int>(orbits.size());
          orbits.emplace_back();
          int cur = s;
          while (orbit_of[cur] < 0) {
            orbit_of[cur] = id;
            orbits[id].push_back(cur);
            cur = alpha.apply_slot(cur);
          }
        }
        for (const auto& orb : orbits) {
          std::set<int> image_ids;
          for (int s : orb) image_ids.insert(orbit_of[beta.apply_slot(s)]);
          CHECK(image_ids.size() == 1);
          CHECK(orbits[*image_ids.begin()].size() == orb.size());
        }
      }
  }
}

TEST_CASE("product generators have structurally disjoint fixed circles", "[families]") {
  for (const auto& p : kGrid) {
    if (p.fam != family_kind::j1 && p.fam != family_kind::j2) continue;
    motion_group g = build_group(p);
    fixed_set fg = fix(*g.named("g")), fh = fix(*g.named("h"));
    bool disjoint = fg.k == fixed_set::kind::empty || fh.k == fixed_set::kind::empty ||
                    (fg.k == fixed_set::kind::circle_x && fh.k == fixed_set::kind::circle_y) ||
                    (fg.k == fixed_set::kind::circle_y && fh.k == fixed_set::kind::circle_x);
    CHECK(disjoint);
  }
}

TEST_CASE("the J1 residue recipes cover the odd branches", "[families]") {
  // l odd with odd s/r: remainder orbits run through the axis circle
  placement pl = build_placement(family_params::j1(3, 3, 3));
  CHECK(pl.group.order() == 18);
  induced_action ia = induce(pl);
  CHECK(ia.relations_ok);
  int on_x = 0, on_y = 0;
  for (const point& q : pl.points) {
    on_x += q.k() == point::kind::on_x;
    on_y += q.k() == point::kind::on_y;
  }
  CHECK(on_x == 3);
  CHECK(on_y == 3);

  // l odd with even s/r: the W remainder stays on generic Y orbits
  placement pl2 = build_placement(family_params::j1(2, 4, 4));
  induced_action ia2 = induce(pl2);
  CHECK(ia2.relations_ok);

  // full free orbits only
  placement pl3 = build_placement(family_params::j1(2, 4, 16));
  CHECK(induce(pl3).relations_ok);
  for (const point& q : pl3.points) CHECK(q.k() == point::kind::free_orbit);

  // positive even residue: generic X and Y orbits carry the remainder
  placement pl4 = build_placement(family_params::j1(2, 4, 24));
  CHECK(induce(pl4).relations_ok);
  int x4 = 0, y4 = 0, free4 = 0;
  for (const point& q : pl4.points) {
    x4 += q.k() == point::kind::on_x;
    y4 += q.k() == point::kind::on_y;
    free4 += q.k() == point::kind::free_orbit;
  }
  CHECK(x4 == 8);
  CHECK(y4 == 8);
  CHECK(free4 == 32);
}
