#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "idealfam/catalog.hpp"
#include "idealfam/enumerate.hpp"
#include "idealfam/minors.hpp"
#include "oracles.hpp"

using namespace idealfam;

namespace {

IdealFamily seven() { return example_ideal_family_3(); }

}  // namespace

TEST_SUITE("minors") {
  TEST_CASE("kind names round-trip") {
    for (MinorKind kind : {MinorKind::kDeletion, MinorKind::kIdealDeletion,
                           MinorKind::kContraction, MinorKind::kTrace}) {
      CHECK(parse_minor_kind(minor_kind_name(kind)) == kind);
    }
    CHECK(!parse_minor_kind("dele").has_value());
  }

  TEST_CASE("deletion examples") {
    const SetFamily d = deletion(seven().family(), 2);
    CHECK(d.ground() == Hyperedge::of({0, 1}));
    CHECK(d.edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0}),
                                              Hyperedge::of({1}), Hyperedge::of({0, 1})});

    CHECK(deletion(power_set_family(2), 1).edges() ==
          std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0})});

    const SetFamily two(full_ground(2), {Hyperedge{}, full_ground(2)});
    CHECK(deletion(two, 0).edges() == std::vector<Hyperedge>{Hyperedge{}});

    CHECK_THROWS_AS(deletion(SetFamily(full_ground(1), {Hyperedge{}}), 0), std::domain_error);
    CHECK_THROWS_AS(deletion(two, 3), std::domain_error);
  }

  TEST_CASE("ideal deletion examples") {
    const IdealFamily d = ideal_deletion(seven(), 2);
    CHECK(d.family().edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0}),
                                                       Hyperedge::of({1}), Hyperedge::of({0, 1})});

    const IdealFamily three = IdealFamily::require(
        SetFamily(full_ground(2), {Hyperedge{}, Hyperedge::of({0}), full_ground(2)}));
    const IdealFamily dd = ideal_deletion(three, 0);
    CHECK(dd.family().ground() == Hyperedge::of({1}));
    CHECK(dd.family().edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({1})});

    const IdealFamily two = IdealFamily::require(
        SetFamily(full_ground(2), {Hyperedge{}, full_ground(2)}));
    CHECK(ideal_deletion(two, 0).family().edges() ==
          std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({1})});
  }

  TEST_CASE("contraction examples") {
    const SetFamily c0 = contraction(seven().family(), 0);
    CHECK(c0.ground() == Hyperedge::of({1, 2}));
    CHECK(c0.edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({1}),
                                               Hyperedge::of({2}), Hyperedge::of({1, 2})});

    const SetFamily c2 = contraction(seven().family(), 2);
    CHECK(c2.edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0}),
                                               Hyperedge::of({0, 1})});
    CHECK(c2.edge_count() == degree(seven().family(), 2));

    CHECK(contraction(power_set_family(2), 1).edges() ==
          std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0})});

    const SetFamily no_v(full_ground(2), {Hyperedge{}, Hyperedge::of({0})});
    CHECK_THROWS_AS(contraction(no_v, 1), std::domain_error);
  }

  TEST_CASE("ideal contraction requires the singleton edge") {
    CHECK(!find_ideal_violation(contraction_ideal(seven(), 2).family()).has_value());
    CHECK(contraction_ideal(seven(), 2).family().edges() ==
          std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0}), Hyperedge::of({0, 1})});

    CHECK(!find_ideal_violation(contraction_ideal(power_set_ideal(3), 1).family()).has_value());

    // degree-one vertex: {v} is not an edge, so the precondition fails
    const IdealFamily deg1 = degree_one_family(3, 2);
    CHECK_THROWS_AS(contraction_ideal(deg1, 2), std::domain_error);
  }

  TEST_CASE("trace examples") {
    const SetFamily t = trace(seven().family(), 2);
    CHECK(t.edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({0}),
                                              Hyperedge::of({1}), Hyperedge::of({0, 1})});

    const SetFamily two(full_ground(2), {Hyperedge{}, full_ground(2)});
    CHECK(trace(two, 0).edges() == std::vector<Hyperedge>{Hyperedge{}, Hyperedge::of({1})});

    // degree 0 at v: edges unchanged, ground shrinks
    const SetFamily no_v(full_ground(2), {Hyperedge{}, Hyperedge::of({0})});
    const SetFamily tt = trace(no_v, 1);
    CHECK(tt.ground() == Hyperedge::of({0}));
    CHECK(tt.edges() == no_v.edges());
  }

  TEST_CASE("degree-one characterization") {
    const IdealFamily deg1 = degree_one_family(3, 2);
    CHECK(!degree_one_characterization(deg1, 2));
    CHECK(degree(deg1.family(), 2) == 1);

    CHECK(degree_one_characterization(seven(), 2));
    CHECK(degree(seven().family(), 2) == 3);

    const IdealFamily three = IdealFamily::require(
        SetFamily(full_ground(2), {Hyperedge{}, Hyperedge::of({0}), full_ground(2)}));
    CHECK(!degree_one_characterization(three, 1));
    CHECK(degree(three.family(), 1) == 1);
  }

  TEST_CASE("decomposition identity examples") {
    const DecompositionReport r = check_decomposition_identities(seven(), 2);
    CHECK(r.all_hold());
    // |F| = |con| + |del|: 7 = 3 + 4; tsh: 10 = 3 + 4 + 3
    REQUIRE(r.checks.size() == 5);
    CHECK(r.checks[0].lhs == 7);
    CHECK(r.checks[0].rhs == 3 + 4);
    CHECK(r.checks[1].lhs == 10);
    CHECK(r.checks[1].rhs == 3 + 4 + 3);
    // U \ {2} = {0,1} is an edge, so deletion and ideal deletion coincide
    CHECK(r.checks[2].lhs == 4);
    CHECK(r.checks[2].rhs == 4);

    const DecompositionReport p = check_decomposition_identities(power_set_ideal(2), 0);
    CHECK(p.all_hold());
    CHECK(p.checks[0].lhs == 4);
    CHECK(p.checks[0].rhs == 2 + 2);
    CHECK(p.checks[1].lhs == 4);
    CHECK(p.checks[1].rhs == 1 + 1 + 2);
  }

  TEST_CASE("preservation lemmas on every ideal family with n<=4") {
    for (int n = 2; n <= 4; ++n) {
      for (oracle::CubeMask mask : oracle::brute_force_ideal_masks(n)) {
        const IdealFamily f = IdealFamily::require(set_family_from_mask(n, mask));
        for (Vertex v = 0; v < n; ++v) {
          CAPTURE(n);
          CAPTURE(mask);
          CAPTURE(v);
          CHECK(!find_ideal_violation(ideal_deletion(f, v).family()).has_value());
          CHECK(!find_ideal_violation(trace(f.family(), v)).has_value());
          if (f.family().contains(Hyperedge::of({v}))) {
            CHECK(!find_ideal_violation(contraction_ideal(f, v).family()).has_value());
          }
          CHECK(check_decomposition_identities(f, v).all_hold());
          CHECK(degree_one_characterization(f, v) == (degree(f.family(), v) >= 2));
        }
      }
    }
  }

  TEST_CASE("partition: contraction and deletion split the family") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const int n = 2 + static_cast<int>(seed % 9);
      const IdealFamily f = random_ideal_family(n, seed);
      const Vertex v = static_cast<Vertex>(seed % static_cast<std::uint64_t>(n));
      const SetFamily del = deletion(f.family(), v);
      const SetFamily con = contraction(f.family(), v);
      CAPTURE(seed);
      CHECK(f.family().edge_count() == del.edge_count() + con.edge_count());
      // reattach v to every contraction edge and merge with the deletion
      std::vector<Hyperedge> rebuilt = del.edges();
      for (Hyperedge e : con.edges()) rebuilt.push_back(e.with(v));
      std::sort(rebuilt.begin(), rebuilt.end());
      CHECK(rebuilt == f.family().edges());
    }
  }

  TEST_CASE("trace equals ideal deletion at degree-one vertices") {
    for (int n = 2; n <= 8; ++n) {
      const IdealFamily f = degree_one_family(n, n - 1);
      CHECK(trace(f.family(), n - 1).edges() == ideal_deletion(f, n - 1).family().edges());
    }
  }
}
