#include <catch2/catch_amalgamated.hpp>

#include "tsg/oracle.hpp"

using namespace tsg;

TEST_CASE("automorphism enumeration counts 2 (n!)^2", "[oracle]") {
  CHECK(count_automorphisms(2) == 8);
  CHECK(count_automorphisms(3) == 72);
  CHECK(count_automorphisms(4) == 1152);
  CHECK_THROWS_AS(count_automorphisms(7), error);
}

TEST_CASE("enumeration never repeats", "[oracle]") {
  std::set<bip_automorphism> seen;
  enumerate_automorphisms(3, [&](const bip_automorphism& a) { seen.insert(a); });
  CHECK(seen.size() == 72);
}

TEST_CASE("realizable orders on small graphs", "[oracle]") {
  CHECK(realizable_orders(3) == std::set<std::int64_t>{1, 2, 3, 6});
  auto r4 = realizable_orders(4);
  CHECK(r4.count(4) == 1);
  auto r5 = realizable_orders(5);
  CHECK(r5.count(5) == 1);
}

TEST_CASE("congruence and enumeration agree on a spot grid", "[oracle]") {
  auto report = crosscheck_theorem1(3, 4, 2, 12);
  CHECK(report.discrepancies.empty());
  CHECK(report.entries.size() == 2 * 11);
  // each positive entry carries an explicit witness
  for (const auto& e : report.entries)
    if (e.enumeration_says) {
      REQUIRE(e.sample.has_value());
      auto a = parse_cycles(e.n, *e.sample);
      CHECK(order(a) == e.m);
      CHECK(match_cases(a).realizable);
    }
}

TEST_CASE("n=3, m=6 has the alternating 6-cycle as witness", "[oracle]") {
  auto report = crosscheck_theorem1(3, 3, 6, 6);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].enumeration_says);
  CHECK(report.entries[0].congruence_says);

  auto none = crosscheck_theorem1(3, 3, 4, 4);
  REQUIRE(none.entries.size() == 1);
  CHECK(!none.entries[0].enumeration_says);
  CHECK(!none.entries[0].congruence_says);
}

TEST_CASE("divisor closure diagnostics are empty at desk scale", "[oracle]") {
  for (int n = 3; n <= 4; ++n) CHECK(divisor_closure_diagnostics(n).empty());
}
