#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "idealfam/catalog.hpp"
#include "idealfam/enumerate.hpp"
#include "oracles.hpp"

using namespace idealfam;

namespace {

std::vector<CubeMask> collect_masks_a(int n) {
  std::vector<CubeMask> out;
  for_each_ideal_mask(n, [&](CubeMask d, std::int64_t, std::int64_t) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CubeMask> collect_masks_b(int n) {
  std::vector<CubeMask> out;
  for_each_ideal_mask_antichain(n, [&](CubeMask d, std::int64_t, std::int64_t) {
    out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("counts match the brute-force oracle for n<=4") {
    const std::uint64_t expected[] = {0, 1, 4, 18, 166};
    for (int n = 1; n <= 4; ++n) {
      const auto oracle_masks = oracle::brute_force_ideal_masks(n);
      CHECK(oracle_masks.size() == expected[n]);

      // the enumerator's downward parts, with the ground set re-added
      std::vector<CubeMask> ours;
      const CubeMask ground_bit = CubeMask{1} << ((1u << n) - 1);
      for (CubeMask d : collect_masks_a(n)) ours.push_back(d | ground_bit);
      std::sort(ours.begin(), ours.end());
      CHECK(ours == oracle_masks);
    }
  }

  TEST_CASE("n=1 yields exactly the two-edge family") {
    std::vector<IdealFamily> families;
    enumerate_ideal_families(1, [&](const IdealFamily& f) { families.push_back(f); });
    REQUIRE(families.size() == 1);
    CHECK(families[0].family().edges() ==
          std::vector<Hyperedge>{Hyperedge{}, full_ground(1)});
  }

  TEST_CASE("both strategies agree up to n=5") {
    for (int n = 1; n <= 4; ++n) {
      CHECK(collect_masks_a(n) == collect_masks_b(n));
    }
    // at n=5 compare counts (7579 families)
    std::uint64_t a = 0, b = 0;
    for_each_ideal_mask(5, [&](CubeMask, std::int64_t, std::int64_t) { ++a; });
    for_each_ideal_mask_antichain(5, [&](CubeMask, std::int64_t, std::int64_t) { ++b; });
    CHECK(a == 7579);
    CHECK(b == 7579);
  }

  TEST_CASE("visitor edge counts and tsh match the materialized family") {
    for (int n = 1; n <= 4; ++n) {
      for_each_ideal_mask(n, [&](CubeMask d, std::int64_t edges, std::int64_t total) {
        const SetFamily f = ideal_family_from_mask(n, d).family();
        CHECK(f.edge_count() == edges);
        CHECK(tsh(f) == total);
      });
    }
  }

  TEST_CASE("every enumerated family validates") {
    enumerate_ideal_families(4, [&](const IdealFamily& f) {
      CHECK(!find_ideal_violation(f.family()).has_value());
    });
  }

  TEST_CASE("downward-closed counts") {
    CHECK(count_downward_closed(2) == 6);
    CHECK(count_downward_closed(3) == 20);
    CHECK(count_downward_closed(4) == 168);
    for (int n = 1; n <= 4; ++n) {
      CHECK(count_downward_closed(n) == oracle::brute_force_count_downward_closed(n));
      CHECK(count_downward_closed(n) == collect_masks_a(n).size() + 2);
    }
  }

  TEST_CASE("range errors") {
    CHECK_THROWS_AS(count_downward_closed(0), std::domain_error);
    CHECK_THROWS_AS(count_downward_closed(7), std::domain_error);
    CHECK_THROWS_AS(for_each_ideal_mask(7, [](CubeMask, std::int64_t, std::int64_t) {}),
                    std::domain_error);
    CHECK_THROWS_AS(verify_rare_vertex_conjecture(5), std::domain_error);
    CHECK_THROWS_AS(
        search_intersection_closed_violations({.n = 6}, [](const SetFamily&, std::int64_t) {}),
        std::domain_error);
  }

  TEST_CASE("verification stats at n=4") {
    const VerificationReport report = verify_ideal_families(4);
    CHECK(report.stats.families_visited == 166);
    CHECK(report.stats.violations == 0);
    CHECK(report.stats.nds_max == 0);  // attained by the power set
  }

  TEST_CASE("iso canonicalization") {
    const IsoCanonicalizer canon(3);
    // the chain {∅,{0}} and {∅,{2}} are relabelings of each other
    const CubeMask a = (CubeMask{1} << 0) | (CubeMask{1} << 1);  // ∅, {0}
    const CubeMask b = (CubeMask{1} << 0) | (CubeMask{1} << 4);  // ∅, {2}
    CHECK(canon.canonical(a) == canon.canonical(b));
    CHECK(canon.canonical(canon.canonical(a)) == canon.canonical(a));

    // distinct shapes stay distinct
    const CubeMask c = (CubeMask{1} << 0) | (CubeMask{1} << 3);  // ∅, {0,1}
    CHECK(canon.canonical(a) != canon.canonical(c));

    // n=2: families {∅}, {∅,{0}}, {∅,{1}}, {∅,{0},{1}} fold into 3 classes
    const IsoCanonicalizer canon2(2);
    std::vector<CubeMask> forms;
    for_each_ideal_mask(2, [&](CubeMask d, std::int64_t, std::int64_t) {
      forms.push_back(canon2.canonical(d));
    });
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    CHECK(forms.size() == 3);
  }

  TEST_CASE("search finds the positive-nds chain family at n=3") {
    std::vector<SetFamily> found;
    const SearchStats stats = search_intersection_closed_violations(
        {.n = 3, .require_empty = true, .require_ground = true},
        [&](const SetFamily& f, std::int64_t value) {
          CHECK(value == nds(f));
          CHECK(value > 0);
          CHECK(is_intersection_closed(f));
          CHECK(find_ideal_violation(f).has_value());
          found.push_back(f);
        });
    CHECK(stats.exhaustive);
    CHECK(stats.found == found.size());
    CHECK(!found.empty());
    CHECK(std::find(found.begin(), found.end(), example_positive_nds_family_3()) != found.end());
  }

  TEST_CASE("search yields nothing at n=1 and n=2") {
    for (int n : {1, 2}) {
      std::uint64_t hits = 0;
      search_intersection_closed_violations(
          {.n = n, .require_empty = true, .require_ground = true},
          [&](const SetFamily&, std::int64_t) { ++hits; });
      CHECK(hits == 0);
    }
  }

  TEST_CASE("sampled search at n=5 is deterministic and sound") {
    std::vector<CubeMask> first, second;
    const SearchOptions options{.n = 5, .require_empty = true, .require_ground = true,
                                .samples = 2'000, .seed = 7};
    search_intersection_closed_violations(options, [&](const SetFamily& f, std::int64_t value) {
      CHECK(is_intersection_closed(f));
      CHECK(nds(f) == value);
      first.push_back(mask_from_family(f));
    });
    const SearchStats stats2 = search_intersection_closed_violations(
        options, [&](const SetFamily& f, std::int64_t) { second.push_back(mask_from_family(f)); });
    CHECK(first == second);
    CHECK(!stats2.exhaustive);
  }

  TEST_CASE("rare-vertex conjecture spot check") {
    const ConjectureReport one = verify_rare_vertex_conjecture(1);
    CHECK(one.families_checked == 1);
    CHECK(one.failures == 0);
    for (int n = 2; n <= 3; ++n) {
      const ConjectureReport r = verify_rare_vertex_conjecture(n);
      CHECK(r.failures == 0);
      CHECK(r.families_checked > 0);
    }
  }

  TEST_CASE("random ideal families are deterministic and valid") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 1 + static_cast<int>(seed % 12);
      const IdealFamily a = random_ideal_family(n, seed);
      const IdealFamily b = random_ideal_family(n, seed);
      CHECK(a == b);
      CHECK(!find_ideal_violation(a.family()).has_value());
    }
    CHECK(random_ideal_family(5, 1) == random_ideal_family(5, 1));
    CHECK_THROWS_AS(random_ideal_family(0, 1), std::domain_error);
    CHECK_THROWS_AS(random_ideal_family(21, 1), std::domain_error);
  }

  TEST_CASE("degree-one antichain reproduces the degree-one family shape") {
    // downward closure of the single generator U \ {v} plus ∅ and U
    const IdealFamily expected = degree_one_family(6, 5);
    std::vector<Hyperedge> edges;
    const std::uint32_t rest = full_ground(6).without(5).bits;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      edges.push_back(Hyperedge{sub});
      if (sub == 0) break;
    }
    edges.push_back(full_ground(6));
    CHECK(SetFamily(full_ground(6), edges) == expected.family());
  }
}
