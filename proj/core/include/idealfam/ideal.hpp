#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "idealfam/family.hpp"

namespace idealfam {

// An ideal family contains the empty set and the ground set, and every
// subset of each non-ground edge is itself an edge.

enum class IdealAxiom {
  kHasEmptySet = 1,
  kHasGroundSet = 2,
  kDownwardClosed = 3,
};

struct IdealViolation {
  IdealAxiom axiom = IdealAxiom::kHasEmptySet;
  Hyperedge edge;     // axiom 3: the edge whose subset is missing
  Hyperedge missing;  // axiom 3: the absent subset
  std::string message() const;
};

// Checks the three axioms in order and reports the first failure with a
// witness. The downward check walks one-vertex removals only; chains of
// removals reach every smaller subset, so this is equivalent to the full
// subset condition.
std::optional<IdealViolation> find_ideal_violation(const SetFamily& f);

// A SetFamily refined by the ideal-family axioms.
class IdealFamily {
 public:
  static std::variant<IdealFamily, IdealViolation> validate(SetFamily f);

  // Throws std::domain_error carrying the violation message.
  static IdealFamily require(SetFamily f);

  // Caller guarantees the axioms hold; checked in debug builds only. Used by
  // the operators whose outputs are ideal by construction.
  static IdealFamily unchecked(SetFamily f);

  const SetFamily& family() const { return family_; }
  operator const SetFamily&() const { return family_; }

  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;

 private:
  explicit IdealFamily(SetFamily f) : family_(std::move(f)) {}
  SetFamily family_;
};

// Witness that `vertex` is rare: an injection from the edges containing it
// into the edges avoiding it. Non-ground sources map to source \ {vertex};
// the ground set maps to maximal_edge.
struct RareVertexCertificate {
  Vertex vertex = 0;
  Hyperedge maximal_edge;
  std::vector<std::pair<Hyperedge, Hyperedge>> mapping;  // source -> target

  // Re-derives everything from f: the domain is exactly the edges containing
  // vertex, targets are edges avoiding vertex, the mapping is injective, and
  // 2*degree - |F| <= 0 follows.
  bool verify(const SetFamily& f) const;
};

// Deterministic construction: maximal_edge is the canonically smallest
// maximal non-ground edge, vertex the smallest label outside it.
RareVertexCertificate rare_vertex_certificate(const IdealFamily& f);

}  // namespace idealfam
