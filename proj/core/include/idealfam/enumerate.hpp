#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "idealfam/family.hpp"
#include "idealfam/ideal.hpp"

namespace idealfam {

// Families on the contiguous ground {0..n-1} with n <= 6 fit in one word:
// bit S of a CubeMask is set iff the subset with mask S is an edge.
using CubeMask = std::uint64_t;

inline constexpr int kMaxEnumerationGround = 6;

SetFamily set_family_from_mask(int n, CubeMask edges);

// Builds D ∪ {ground} from the downward-closed part D.
IdealFamily ideal_family_from_mask(int n, CubeMask downward_part);

// Inverse of set_family_from_mask; the family must live on {0..n-1}, n <= 6.
CubeMask mask_from_family(const SetFamily& f);

// Receives the downward-closed part D (the family minus the ground set),
// then |D|+1 and tsh(D)+n, i.e. the edge count and tsh of D ∪ {U}.
using IdealMaskVisitor = std::function<void(CubeMask, std::int64_t, std::int64_t)>;

// Visits every ideal family on {0..n-1} exactly once, deterministically.
// Strategy A: grow downward-closed families subset by subset in rank order;
// a subset may be included only when all its one-smaller subsets are in.
void for_each_ideal_mask(int n, const IdealMaskVisitor& visit);

// Strategy B: enumerate antichains of proper subsets in ascending member
// order and emit the downward closure of each. Same families as strategy A,
// different order. Kept independent as a cross-check.
void for_each_ideal_mask_antichain(int n, const IdealMaskVisitor& visit);

// Materializing wrapper over strategy A.
void enumerate_ideal_families(int n, const std::function<void(const IdealFamily&)>& visit);

// Downward-closed subfamilies of the n-cube, counting the empty family and
// the full power set; exceeds the ideal-family count by exactly 2.
std::uint64_t count_downward_closed(int n);

// Minimum image of a family mask over all n! vertex relabelings.
class IsoCanonicalizer {
 public:
  explicit IsoCanonicalizer(int n);
  CubeMask canonical(CubeMask family) const;

 private:
  int subset_count_ = 0;
  std::vector<std::array<std::uint8_t, 64>> subset_maps_;
};

struct EnumerationStats {
  int n = 0;
  std::uint64_t families_visited = 0;
  std::int64_t nds_max = std::numeric_limits<std::int64_t>::min();
  std::uint64_t violations = 0;  // families with nds > 0
  std::chrono::milliseconds wall_time{0};

  // Associative-commutative, so partial stats from parallel workers can be
  // combined in any order.
  void merge(const EnumerationStats& other);
};

struct VerifyOptions {
  bool check_injection = false;   // rare-vertex certificate verifies
  bool check_identities = false;  // decomposition identities at every vertex
  bool up_to_iso = false;         // also count families up to relabeling
  std::function<void(std::uint64_t)> progress;  // called every progress_step families
  std::uint64_t progress_step = 1'000'000;
};

struct VerificationReport {
  EnumerationStats stats;
  std::uint64_t families_up_to_iso = 0;
  std::uint64_t injection_failures = 0;
  std::uint64_t identity_failures = 0;
};

// Runs strategy A over every ideal family on {0..n-1}, tracking nds stats
// and the optional per-family checks.
VerificationReport verify_ideal_families(int n, const VerifyOptions& options = {});

struct SearchOptions {
  int n = 3;
  bool require_empty = false;
  bool require_ground = false;
  std::uint64_t samples = 50'000;  // n = 5 only
  std::uint64_t seed = 1;          // n = 5 only
};

struct SearchStats {
  std::uint64_t families_checked = 0;
  std::uint64_t found = 0;
  bool exhaustive = true;
};

// Intersection-closed families with nds > 0. Exhaustive over all families on
// {0..n-1} for n <= 4; seeded closure sampling at n = 5 (reported with
// exhaustive = false).
SearchStats search_intersection_closed_violations(
    const SearchOptions& options,
    const std::function<void(const SetFamily&, std::int64_t)>& on_found);

struct ConjectureReport {
  int n = 0;
  std::uint64_t families_checked = 0;
  std::uint64_t failures = 0;
};

// Exhaustively confirms that every intersection-closed family containing the
// empty and ground sets has a rare vertex; n <= 4.
ConjectureReport verify_rare_vertex_conjecture(int n);

// Deterministic in (n, seed): the downward closure of a random antichain of
// proper subsets, plus the empty and ground sets. 1 <= n <= kUniverseWidth.
IdealFamily random_ideal_family(int n, std::uint64_t seed);

}  // namespace idealfam
