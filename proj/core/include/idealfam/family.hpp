#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

// Bit conventions used throughout:
//   - a vertex is an integer label in [0, kUniverseWidth)
//   - a hyperedge is a bitmask; bit j set <=> vertex j is a member
//   - a family keeps its edges duplicate-free and sorted ascending by mask
//     value; that order is canonical for serialization and equality
//   - minor operators shrink the ground mask but keep parent vertex labels

namespace idealfam {

inline constexpr int kUniverseWidth = 20;

using Vertex = int;

struct Hyperedge {
  std::uint32_t bits = 0;

  constexpr Hyperedge() = default;
  constexpr explicit Hyperedge(std::uint32_t mask) : bits(mask) {}

  static constexpr Hyperedge of(std::initializer_list<Vertex> vertices) {
    std::uint32_t mask = 0;
    for (Vertex v : vertices) mask |= std::uint32_t{1} << v;
    return Hyperedge{mask};
  }

  constexpr bool contains(Vertex v) const { return (bits >> v) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool subset_of(Hyperedge o) const { return (bits & ~o.bits) == 0; }
  constexpr Hyperedge with(Vertex v) const { return Hyperedge{bits | (std::uint32_t{1} << v)}; }
  constexpr Hyperedge without(Vertex v) const { return Hyperedge{bits & ~(std::uint32_t{1} << v)}; }

  friend constexpr Hyperedge operator&(Hyperedge a, Hyperedge b) { return Hyperedge{a.bits & b.bits}; }
  friend constexpr Hyperedge operator|(Hyperedge a, Hyperedge b) { return Hyperedge{a.bits | b.bits}; }
  friend constexpr auto operator<=>(Hyperedge a, Hyperedge b) = default;
};

// The ground set {0, ..., n-1}.
constexpr Hyperedge full_ground(int n) { return Hyperedge{(std::uint32_t{1} << n) - 1u}; }

// Calls fn for every vertex label in e, ascending.
template <typename Fn>
constexpr void for_each_vertex(Hyperedge e, Fn&& fn) {
  for (std::uint32_t m = e.bits; m != 0; m &= m - 1) {
    fn(static_cast<Vertex>(std::countr_zero(m)));
  }
}

std::vector<Vertex> vertices_of(Hyperedge e);

// Renders the label list, e.g. "{0,2}". Diagnostics only; files use the
// bit-string format from io.hpp.
std::string to_string(Hyperedge e);

// A labeled ground set plus a duplicate-free, canonically ordered collection
// of hyperedges. Immutable after construction.
class SetFamily {
 public:
  // Sorts the edges; throws std::invalid_argument on a duplicate edge, an
  // edge outside the ground set, or an empty/overwide ground set.
  SetFamily(Hyperedge ground, std::vector<Hyperedge> edges);

  Hyperedge ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  bool contains(Hyperedge e) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  Hyperedge ground_;
  std::vector<Hyperedge> edges_;
};

// Number of edges containing v; v must lie in the ground set.
std::int64_t degree(const SetFamily& f, Vertex v);

// Total size of hyperedges: sum of |H| over all edges. Equals the sum of all
// vertex degrees by double counting.
std::int64_t tsh(const SetFamily& f);

// Normalized degree sum, 2*tsh - |U|*|F|, in exact signed arithmetic.
// Non-positive nds is the average rarity condition.
std::int64_t nds(const SetFamily& f);

// 2*degree(f, v) - |F| <= 0, in integers; no division.
bool is_rare(const SetFamily& f, Vertex v);

bool is_average_rare(const SetFamily& f);

// Degrees of the ground vertices, ascending by label.
std::vector<std::int64_t> degree_sequence(const SetFamily& f);

// Rare vertices, ascending by label.
std::vector<Vertex> rare_vertices(const SetFamily& f);

struct IntersectionWitness {
  Hyperedge a, b;  // a & b is not an edge
};

// First (in canonical pair order) pair of edges whose intersection is
// missing, or nullopt when the family is intersection-closed.
std::optional<IntersectionWitness> find_intersection_violation(const SetFamily& f);

bool is_intersection_closed(const SetFamily& f);

// Smallest intersection-closed family containing the generators, on the same
// ground set. Extensive and idempotent.
SetFamily intersection_closure(const SetFamily& generators);

}  // namespace idealfam
