#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tsg/oracle.hpp"
#include "tsg/realizable.hpp"

using namespace tsg;

namespace {

std::vector<int> case_ids(const realizability_verdict& v) {
  std::vector<int> ids;
  for (const auto& m : v.matches) ids.push_back(m.case_id);
  return ids;
}

}  // namespace

TEST_CASE("single long alternating cycle matches pattern 1", "[realizable]") {
  auto a = parse_cycles(3, "(v1 w1 v2 w2 v3 w3)");
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{1});
}

TEST_CASE("part-swapping map with one exceptional 4-cycle matches pattern 9", "[realizable]") {
  auto a = parse_cycles(6, "(v1 w1 v2 w2)(v3 w3 v4 w4 v5 w5 v6 w6)");
  REQUIRE(order(a) == 8);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{9});
  CHECK(v.matches[0].parts_swapped_for_match == false);

  // two exceptional cycles: rejected
  auto b = parse_cycles(5, "(v1 w1 v2 w2)(v3 w3)(v4 w4 v5 w5)");
  CHECK(!match_cases(b).realizable);
}

TEST_CASE("fixed vertices combined with exceptional cycles match nothing", "[realizable]") {
  // V = one fixed vertex + a 3-cycle, W = four fixed vertices, order 3
  auto a = parse_cycles(4, "(v1 v2 v3)");
  REQUIRE(order(a) == 3);
  auto v = match_cases(a);
  CHECK(!v.realizable);
  CHECK(v.matches.empty());
  CHECK(!v.diagnostics.empty());
}

TEST_CASE("identity is realizable with no pattern", "[realizable]") {
  auto v = match_cases(bip_automorphism::identity(5));
  CHECK(v.realizable);
  CHECK(v.matches.empty());
}

TEST_CASE("n of at most 2 is rejected", "[realizable]") {
  CHECK_THROWS_AS(match_cases(bip_automorphism::identity(2)), error);
}

TEST_CASE("fixed vertices in one part only match pattern 2", "[realizable]") {
  // V entirely fixed, W one 3-cycle
  auto a = parse_cycles(3, "(w1 w2 w3)");
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{2});
  CHECK(v.matches[0].parts_swapped_for_match == false);

  // same shape with the parts interchanged
  auto b = parse_cycles(3, "(v1 v2 v3)");
  auto vb = match_cases(b);
  REQUIRE(vb.realizable);
  CHECK(case_ids(vb) == std::vector<int>{2});
  CHECK(vb.matches[0].parts_swapped_for_match == true);
}

TEST_CASE("few fixed vertices in both parts match pattern 3", "[realizable]") {
  auto a = parse_cycles(4, "(v1 v2 v3)(w1 w2 w3)");  // v4, w4 fixed
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{3});

  auto c = parse_cycles(5, "(v1 v2 v3 v4)(w1 w2 w3 w4)");
  // v5 and w5 fixed: case 3
  CHECK(case_ids(match_cases(c)) == std::vector<int>{3});

  // coprime cycle lengths leave nothing in order-length cycles
  auto e = parse_cycles(5, "(v1 v2 v3 v4)(w1 w2 w3 w4 w5)");
  REQUIRE(order(e) == 20);
  CHECK(!match_cases(e).realizable);

  auto f = parse_cycles(3, "(v1 v2)(w1 w2)");
  // r = 2: v3 and w3 fixed, one each: case 3
  CHECK(case_ids(match_cases(f)) == std::vector<int>{3});

  // three fixed in one part: nothing
  auto d = parse_cycles(6, "(v1 v2 v3 v4 v5 v6)(w1 w2 w3)");
  CHECK(!match_cases(d).realizable);
}

TEST_CASE("exceptional short cycles in one part match pattern 4", "[realizable]") {
  auto a = parse_cycles(4, "(v1 v2)(v3 v4)(w1 w2 w3 w4)");
  REQUIRE(order(a) == 4);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{4});
  CHECK(v.matches[0].params.at("j") == 2);

  // coprime exceptional lengths: order 84, nothing is an 84-cycle
  auto b = parse_cycles(7, "(v1 v2 v3)(v4 v5 v6 v7)(w1 w2 w3 w4 w5 w6 w7)");
  CHECK(!match_cases(b).realizable);
}

TEST_CASE("two exceptional lengths in one part match pattern 5", "[realizable]") {
  auto a = parse_cycles(12,
                        "(v1 v2)(v3 v4)(v5 v6)(v7 v8 v9)(v10 v11 v12)"
                        "(w1 w2 w3 w4 w5 w6)(w7 w8 w9 w10 w11 w12)");
  REQUIRE(order(a) == 6);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{5});
  CHECK(v.matches[0].params.at("j") == 2);
  CHECK(v.matches[0].params.at("k") == 3);
}

TEST_CASE("exceptional lengths split across the parts match pattern 6", "[realizable]") {
  auto a = parse_cycles(6, "(v1 v2)(v3 v4)(v5 v6)(w1 w2 w3)(w4 w5 w6)");
  REQUIRE(order(a) == 6);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{6});
  CHECK(v.matches[0].params.at("j") == 2);
  CHECK(v.matches[0].params.at("k") == 3);
}

TEST_CASE("a 2-cycle in each part matches pattern 7", "[realizable]") {
  auto a = parse_cycles(6, "(v1 v2)(v3 v4 v5 v6)(w1 w2)(w3 w4 w5 w6)");
  REQUIRE(order(a) == 4);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{7});
}

TEST_CASE("pattern 8 needs odd half-order and half-length cycles", "[realizable]") {
  auto a = parse_cycles(8, "(v1 v2)(v3 v4 v5)(v6 v7 v8)(w1 w2)(w3 w4 w5 w6 w7 w8)");
  REQUIRE(order(a) == 6);
  auto v = match_cases(a);
  REQUIRE(v.realizable);
  CHECK(case_ids(v) == std::vector<int>{8});

  // half-length cycles with r/2 even are rejected: r = 8, 4-cycles in V
  auto b = parse_cycles(10,
                        "(v1 v2)(v3 v4 v5 v6)(v7 v8 v9 v10)"
                        "(w1 w2)(w3 w4 w5 w6 w7 w8 w9 w10)");
  REQUIRE(order(b) == 8);
  CHECK(!match_cases(b).realizable);
}

TEST_CASE("matching is invariant under inversion", "[realizable]") {
  for (int n = 3; n <= 4; ++n) {
    enumerate_automorphisms(n, [&](const bip_automorphism& a) {
      if (a.is_identity()) return;
      auto va = match_cases(a);
      auto vb = match_cases(inverse(a));
      CHECK(va.realizable == vb.realizable);
      CHECK(case_ids(va) == case_ids(vb));
    });
  }
}

TEST_CASE("matching is invariant under relabeling within parts", "[realizable]") {
  std::mt19937 rng(7);
  auto base = parse_cycles(6, "(v1 w1 v2 w2)(v3 w3 v4 w4 v5 w5 v6 w6)");
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> pv(6), pw(6);
    std::iota(pv.begin(), pv.end(), 0);
    std::iota(pw.begin(), pw.end(), 0);
    std::shuffle(pv.begin(), pv.end(), rng);
    std::shuffle(pw.begin(), pw.end(), rng);
    std::vector<int> img(12);
    for (int i = 0; i < 6; ++i) {
      img[i] = pv[i];
      img[6 + i] = 6 + pw[i];
    }
    auto relabel = bip_automorphism::validate(6, img);
    auto conj = relabel * base * inverse(relabel);
    auto v = match_cases(conj);
    REQUIRE(v.realizable);
    CHECK(case_ids(v) == std::vector<int>{9});
  }
}
