#include "idealfam/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "idealfam/minors.hpp"

namespace idealfam {

namespace {

void require_range(int n, int max) {
  if (n < 1 || n > max) {
    throw std::domain_error("ground size " + std::to_string(n) + " out of range [1, " +
                            std::to_string(max) + "]");
  }
}

constexpr CubeMask bit_of(std::uint32_t subset) { return CubeMask{1} << subset; }

// All 2^n subset indices as one mask (n <= 6).
constexpr CubeMask all_subsets_mask(int n) {
  return n == kMaxEnumerationGround ? ~CubeMask{0} : (CubeMask{1} << (1u << n)) - 1;
}

// Subsets of {0..n-1} ordered by (size, mask value), plus for each subset the
// mask of its one-smaller subsets. An include decision is legal exactly when
// all of those are already in; chains of such steps make the grown family
// downward-closed.
struct RankOrder {
  std::vector<std::uint32_t> order;
  std::array<CubeMask, 64> immediate{};
};

RankOrder make_rank_order(int n, bool proper_nonempty_only) {
  RankOrder ro;
  const std::uint32_t full = (1u << n) - 1;
  const int lo = proper_nonempty_only ? 1 : 0;
  const int hi = proper_nonempty_only ? n - 1 : n;
  for (int size = lo; size <= hi; ++size) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (std::popcount(s) == size) ro.order.push_back(s);
    }
  }
  for (std::uint32_t s = 0; s <= full; ++s) {
    CubeMask imm = 0;
    for (std::uint32_t m = s; m != 0; m &= m - 1) {
      imm |= bit_of(s & ~(std::uint32_t{1} << std::countr_zero(m)));
    }
    ro.immediate[s] = imm;
  }
  return ro;
}

// Depth-first growth over the rank order. The exclude branch continues in
// the loop; only the include branch recurses.
template <typename Leaf>
struct DownwardDfs {
  const std::uint32_t* order;
  const CubeMask* immediate;
  int length;
  Leaf& leaf;

  void run(int idx, CubeMask d, std::int64_t edges, std::int64_t total_size) const {
    while (idx < length) {
      const std::uint32_t s = order[idx];
      ++idx;
      if ((d & immediate[s]) == immediate[s]) {
        run(idx, d | bit_of(s), edges + 1, total_size + std::popcount(s));
      }
    }
    leaf(d, edges, total_size);
  }
};

template <typename Leaf>
void visit_downward_parts(int n, Leaf&& leaf) {
  const RankOrder ro = make_rank_order(n, true);
  DownwardDfs<Leaf> dfs{ro.order.data(), ro.immediate.data(), static_cast<int>(ro.order.size()),
                        leaf};
  dfs.run(0, CubeMask{1}, 1, 0);  // the empty set is forced
}

struct AntichainTables {
  std::array<CubeMask, 64> cone{};        // all submasks of the subset
  std::array<CubeMask, 64> comparable{};  // submasks and supermasks
  std::array<std::int8_t, 64> size{};
};

AntichainTables make_antichain_tables(int n) {
  AntichainTables t;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    t.size[s] = static_cast<std::int8_t>(std::popcount(s));
    for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
      t.cone[s] |= bit_of(sub);
      if (sub == 0) break;
    }
    for (std::uint32_t other = 0; other <= full; ++other) {
      if ((other & s) == s || (other & s) == other) t.comparable[s] |= bit_of(other);
    }
  }
  return t;
}

// Antichain members are chosen in ascending subset order; each recursion
// keeps only later, incomparable candidates, so every antichain of proper
// subsets appears exactly once. Every node of this tree is one family.
template <typename Emit>
struct AntichainDfs {
  const AntichainTables& t;
  Emit& emit;

  void run(CubeMask allowed, CubeMask d) const {
    while (allowed != 0) {
      const std::uint32_t q = static_cast<std::uint32_t>(std::countr_zero(allowed));
      allowed &= allowed - 1;
      const CubeMask grown = d | t.cone[q];
      emit(grown);
      run(allowed & ~t.comparable[q], grown);
    }
  }
};

std::int64_t mask_tsh(const AntichainTables& t, CubeMask d) {
  std::int64_t total = 0;
  for (CubeMask m = d; m != 0; m &= m - 1) total += t.size[std::countr_zero(m)];
  return total;
}

// Per-vertex masks over subset indices: bit S of contains[v] is set iff the
// subset S contains v.
std::array<CubeMask, kMaxEnumerationGround> make_contains_masks(int n) {
  std::array<CubeMask, kMaxEnumerationGround> contains{};
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1u) contains[v] |= bit_of(s);
    }
  }
  return contains;
}

bool mask_intersection_closed(CubeMask family) {
  for (CubeMask mi = family; mi != 0; mi &= mi - 1) {
    const std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(mi));
    for (CubeMask mj = mi & (mi - 1); mj != 0; mj &= mj - 1) {
      const std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(mj));
      if ((family & bit_of(a & b)) == 0) return false;
    }
  }
  return true;
}

CubeMask mask_intersection_closure(CubeMask family) {
  for (;;) {
    CubeMask added = 0;
    for (CubeMask mi = family; mi != 0; mi &= mi - 1) {
      const std::uint32_t a = static_cast<std::uint32_t>(std::countr_zero(mi));
      for (CubeMask mj = mi & (mi - 1); mj != 0; mj &= mj - 1) {
        added |= bit_of(a & static_cast<std::uint32_t>(std::countr_zero(mj)));
      }
    }
    if ((added & ~family) == 0) return family;
    family |= added;
  }
}

std::int64_t mask_nds(int n, const std::array<CubeMask, kMaxEnumerationGround>& contains,
                      CubeMask family) {
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) total += std::popcount(family & contains[v]);
  return 2 * total - std::int64_t{n} * std::popcount(family);
}

bool mask_has_rare_vertex(int n, const std::array<CubeMask, kMaxEnumerationGround>& contains,
                          CubeMask family) {
  const std::int64_t edges = std::popcount(family);
  for (int v = 0; v < n; ++v) {
    if (2 * std::popcount(family & contains[v]) - edges <= 0) return true;
  }
  return false;
}

}  // namespace

SetFamily set_family_from_mask(int n, CubeMask edges) {
  require_range(n, kMaxEnumerationGround);
  std::vector<Hyperedge> out;
  out.reserve(static_cast<std::size_t>(std::popcount(edges)));
  for (CubeMask m = edges; m != 0; m &= m - 1) {
    out.push_back(Hyperedge{static_cast<std::uint32_t>(std::countr_zero(m))});
  }
  return SetFamily(full_ground(n), std::move(out));
}

IdealFamily ideal_family_from_mask(int n, CubeMask downward_part) {
  const std::uint32_t full = (1u << n) - 1;
  return IdealFamily::unchecked(set_family_from_mask(n, downward_part | bit_of(full)));
}

CubeMask mask_from_family(const SetFamily& f) {
  if (f.ground() != full_ground(f.ground_size()) || f.ground_size() > kMaxEnumerationGround) {
    throw std::domain_error("family masks require a contiguous ground set of size <= " +
                            std::to_string(kMaxEnumerationGround));
  }
  CubeMask mask = 0;
  for (Hyperedge e : f.edges()) mask |= bit_of(e.bits);
  return mask;
}

void for_each_ideal_mask(int n, const IdealMaskVisitor& visit) {
  require_range(n, kMaxEnumerationGround);
  visit_downward_parts(n, [&](CubeMask d, std::int64_t edges, std::int64_t total_size) {
    visit(d, edges + 1, total_size + n);
  });
}

void for_each_ideal_mask_antichain(int n, const IdealMaskVisitor& visit) {
  require_range(n, kMaxEnumerationGround);
  const AntichainTables tables = make_antichain_tables(n);
  const std::uint32_t full = (1u << n) - 1;
  const CubeMask candidates = all_subsets_mask(n) & ~bit_of(full);
  auto emit = [&](CubeMask d) {
    visit(d, std::popcount(d) + 1, mask_tsh(tables, d) + n);
  };
  AntichainDfs<decltype(emit)> dfs{tables, emit};
  dfs.run(candidates, 0);
}

void enumerate_ideal_families(int n, const std::function<void(const IdealFamily&)>& visit) {
  for_each_ideal_mask(n, [&](CubeMask d, std::int64_t, std::int64_t) {
    visit(ideal_family_from_mask(n, d));
  });
}

std::uint64_t count_downward_closed(int n) {
  require_range(n, kMaxEnumerationGround);
  const RankOrder ro = make_rank_order(n, false);
  std::uint64_t count = 0;
  auto leaf = [&](CubeMask, std::int64_t, std::int64_t) { ++count; };
  DownwardDfs<decltype(leaf)> dfs{ro.order.data(), ro.immediate.data(),
                                  static_cast<int>(ro.order.size()), leaf};
  dfs.run(0, 0, 0, 0);
  return count;
}

IsoCanonicalizer::IsoCanonicalizer(int n) {
  require_range(n, kMaxEnumerationGround);
  subset_count_ = 1 << n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    auto& map = subset_maps_.emplace_back();
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(subset_count_); ++s) {
      std::uint32_t image = 0;
      for (std::uint32_t m = s; m != 0; m &= m - 1) {
        image |= std::uint32_t{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
      }
      map[s] = static_cast<std::uint8_t>(image);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

CubeMask IsoCanonicalizer::canonical(CubeMask family) const {
  CubeMask best = ~CubeMask{0};
  for (const auto& map : subset_maps_) {
    CubeMask image = 0;
    for (CubeMask m = family; m != 0; m &= m - 1) {
      image |= bit_of(map[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    best = std::min(best, image);
  }
  return best;
}

void EnumerationStats::merge(const EnumerationStats& other) {
  families_visited += other.families_visited;
  nds_max = std::max(nds_max, other.nds_max);
  violations += other.violations;
  wall_time += other.wall_time;
}

VerificationReport verify_ideal_families(int n, const VerifyOptions& options) {
  require_range(n, kMaxEnumerationGround);
  VerificationReport report;
  report.stats.n = n;

  std::optional<IsoCanonicalizer> canon;
  std::unordered_set<CubeMask> iso_forms;
  if (options.up_to_iso) canon.emplace(n);
  const bool materialize = options.check_injection || options.check_identities;

  const auto start = std::chrono::steady_clock::now();
  for_each_ideal_mask(n, [&](CubeMask d, std::int64_t edges, std::int64_t total_size) {
    EnumerationStats& stats = report.stats;
    ++stats.families_visited;
    const std::int64_t value = 2 * total_size - std::int64_t{n} * edges;
    stats.nds_max = std::max(stats.nds_max, value);
    if (value > 0) ++stats.violations;

    if (canon) iso_forms.insert(canon->canonical(d));

    if (materialize) {
      const IdealFamily fam = ideal_family_from_mask(n, d);
      if (options.check_injection && !rare_vertex_certificate(fam).verify(fam.family())) {
        ++report.injection_failures;
      }
      if (options.check_identities && n >= 2) {
        for (Vertex v = 0; v < n; ++v) {
          if (!check_decomposition_identities(fam, v).all_hold()) {
            ++report.identity_failures;
            break;
          }
        }
      }
    }
    if (options.progress && stats.families_visited % options.progress_step == 0) {
      options.progress(stats.families_visited);
    }
  });
  report.stats.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report.families_up_to_iso = iso_forms.size();
  return report;
}

SearchStats search_intersection_closed_violations(
    const SearchOptions& options,
    const std::function<void(const SetFamily&, std::int64_t)>& on_found) {
  require_range(options.n, 5);
  const int n = options.n;
  const std::uint32_t full = (1u << n) - 1;
  const auto contains = make_contains_masks(n);
  SearchStats stats;

  auto consider = [&](CubeMask family) {
    ++stats.families_checked;
    if (!mask_intersection_closed(family)) return;
    const std::int64_t value = mask_nds(n, contains, family);
    if (value > 0) {
      ++stats.found;
      on_found(set_family_from_mask(n, family), value);
    }
  };

  if (n <= 4) {
    const std::uint64_t limit = std::uint64_t{1} << (1u << n);
    for (std::uint64_t family = 0; family < limit; ++family) {
      if (options.require_empty && (family & 1) == 0) continue;
      if (options.require_ground && (family & bit_of(full)) == 0) continue;
      consider(family);
    }
  } else {
    // 2^32 closure systems at n = 5: sample random generator sets instead.
    stats.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::unordered_set<CubeMask> tested;
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      CubeMask family = 0;
      const int generators = 1 + static_cast<int>(rng() % 10);
      for (int g = 0; g < generators; ++g) {
        family |= bit_of(static_cast<std::uint32_t>(rng() % (full + 1u)));
      }
      if (options.require_empty) family |= 1;
      if (options.require_ground) family |= bit_of(full);
      family = mask_intersection_closure(family);
      if (!tested.insert(family).second) continue;
      consider(family);
    }
  }
  return stats;
}

ConjectureReport verify_rare_vertex_conjecture(int n) {
  require_range(n, 4);
  const std::uint32_t full = (1u << n) - 1;
  const auto contains = make_contains_masks(n);
  ConjectureReport report;
  report.n = n;
  const std::uint64_t limit = std::uint64_t{1} << (1u << n);
  for (std::uint64_t family = 0; family < limit; ++family) {
    if ((family & 1) == 0 || (family & bit_of(full)) == 0) continue;
    if (!mask_intersection_closed(family)) continue;
    ++report.families_checked;
    if (!mask_has_rare_vertex(n, contains, family)) ++report.failures;
  }
  return report;
}

IdealFamily random_ideal_family(int n, std::uint64_t seed) {
  require_range(n, kUniverseWidth);
  std::mt19937_64 rng(seed);
  const std::uint32_t full = (1u << n) - 1;

  // k distinct proper subsets, dominated ones dropped; raw engine output
  // keeps the construction reproducible across standard libraries.
  const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<std::uint32_t> generators;
  while (static_cast<int>(generators.size()) < k) {
    const std::uint32_t g =
        full == 1 ? 0 : static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(full));
    if (std::find(generators.begin(), generators.end(), g) == generators.end()) {
      generators.push_back(g);
    }
  }

  std::vector<bool> present(std::size_t{1} << n, false);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (i != j && (generators[i] & generators[j]) == generators[i]) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    for (std::uint32_t sub = generators[i];; sub = (sub - 1) & generators[i]) {
      present[sub] = true;
      if (sub == 0) break;
    }
  }
  present[0] = true;
  present[full] = true;

  std::vector<Hyperedge> edges;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (present[s]) edges.push_back(Hyperedge{s});
  }
  return IdealFamily::unchecked(SetFamily(full_ground(n), std::move(edges)));
}

}  // namespace idealfam
