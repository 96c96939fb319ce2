#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealfam/family.hpp"
#include "idealfam/ideal.hpp"

// Single-vertex minor operators. All of them require |ground| >= 2 and keep
// the parent's vertex labels, so parent and minor quantities subtract
// directly in the decomposition identities.

namespace idealfam {

enum class MinorKind { kDeletion, kIdealDeletion, kContraction, kTrace };

std::optional<MinorKind> parse_minor_kind(std::string_view name);  // del delp con trace
std::string_view minor_kind_name(MinorKind kind);

// Edges avoiding v, on ground \ {v}.
SetFamily deletion(const SetFamily& f, Vertex v);

// Deletion plus the shrunken ground set (a no-op when already present);
// always ideal again.
IdealFamily ideal_deletion(const IdealFamily& f, Vertex v);

// Edges containing v, with v removed; requires degree(f, v) >= 1. No
// deduplication is needed: sources differ only off v.
SetFamily contraction(const SetFamily& f, Vertex v);

// Contraction of an ideal family; requires {v} to be an edge.
IdealFamily contraction_ideal(const IdealFamily& f, Vertex v);

// All edges with v removed, deduplicated.
SetFamily trace(const SetFamily& f, Vertex v);

// Returns whether {v} is an edge, after checking that it is one exactly when
// degree(f, v) >= 2. A mismatch throws std::logic_error.
bool degree_one_characterization(const IdealFamily& f, Vertex v);

struct IdentityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

struct DecompositionReport {
  Vertex vertex = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

// Exact integer identities tying a family to its minors at v:
//   |F| = |contraction| + |deletion|
//   tsh(F) = tsh(contraction) + tsh(deletion) + degree(F, v)
// plus the deletion / ideal-deletion bridge, which depends on whether
// U \ {v} is an edge.
DecompositionReport check_decomposition_identities(const IdealFamily& f, Vertex v);

}  // namespace idealfam
