#include "idealfam/catalog.hpp"

#include <stdexcept>

namespace idealfam {

SetFamily power_set_family(int n) {
  if (n < 1 || n > kUniverseWidth) {
    throw std::domain_error("power set ground size out of range");
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Hyperedge> edges;
  edges.reserve((std::size_t{1} << n));
  for (std::uint32_t s = 0; s <= full; ++s) edges.push_back(Hyperedge{s});
  return SetFamily(full_ground(n), std::move(edges));
}

IdealFamily power_set_ideal(int n) { return IdealFamily::unchecked(power_set_family(n)); }

IdealFamily degree_one_family(int n, Vertex v) {
  if (n < 1 || n > kUniverseWidth) {
    throw std::domain_error("ground size out of range");
  }
  if (v < 0 || v >= n) {
    throw std::domain_error("vertex " + std::to_string(v) + " outside ground of size " +
                            std::to_string(n));
  }
  const std::uint32_t rest = full_ground(n).without(v).bits;
  std::vector<Hyperedge> edges;
  for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
    edges.push_back(Hyperedge{sub});
    if (sub == 0) break;
  }
  edges.push_back(full_ground(n));
  return IdealFamily::unchecked(SetFamily(full_ground(n), std::move(edges)));
}

IdealFamily example_ideal_family_3() {
  return IdealFamily::unchecked(SetFamily(
      full_ground(3), {Hyperedge::of({}), Hyperedge::of({0}), Hyperedge::of({1}),
                       Hyperedge::of({2}), Hyperedge::of({0, 1}), Hyperedge::of({0, 2}),
                       Hyperedge::of({0, 1, 2})}));
}

SetFamily example_positive_nds_family_3() {
  return SetFamily(full_ground(3),
                   {Hyperedge::of({}), Hyperedge::of({0}), Hyperedge::of({0, 1}),
                    Hyperedge::of({0, 2}), Hyperedge::of({0, 1, 2})});
}

}  // namespace idealfam
