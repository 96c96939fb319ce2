#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "idealfam/ideal.hpp"

// Numeric replay of the inductive proof that every ideal family has
// non-positive normalized degree sum: classify each (family, rare vertex)
// pair into one of the proof's cases, check the case's exact identity, and
// recurse into the minors down to the one-vertex base case.

namespace idealfam {

enum class CaseTag {
  kBase,         // |U| = 1
  kDeg1WithUV,   // degree(v) = 1 and U \ {v} is an edge: closed-form leaf
  kDeg1NoUV,     // degree(v) = 1, U \ {v} missing: recurse into the deletion
  kDegGe2WithUV, // degree(v) >= 2, U \ {v} present: deletion + contraction
  kDegGe2NoUV,   // degree(v) >= 2, U \ {v} missing: deletion + contraction
};

std::string_view case_tag_name(CaseTag tag);

// v must be rare in f; throws std::domain_error otherwise.
CaseTag classify_case(const IdealFamily& f, Vertex v);

struct CaseIdentity {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

// The exact identity the case's derivation rests on; lhs is always nds(f).
//   Base:         nds = 0
//   Deg1WithUV:   nds = n - 2^(n-1), after checking the forced shape
//                 {H : v not in H} ∪ {U}
//   Deg1NoUV:     nds = nds(delp) + 2 - |delp|
//   DegGe2WithUV: nds = nds(delp) + nds(con) + 2*degree(v) - |F|
//   DegGe2NoUV:   nds = nds(delp) + nds(con) + 2*degree(v) - |F| - n + 1
// where delp = ideal_deletion(f, v) and con = contraction_ideal(f, v).
CaseIdentity check_case_identity(const IdealFamily& f, Vertex v, CaseTag tag);

// One node per family reached by the induction. children[0], when present,
// replays the ideal deletion; children[1] the contraction.
struct InductionCertificate {
  IdealFamily family;
  Vertex vertex = 0;
  CaseTag tag = CaseTag::kBase;
  std::int64_t identity_lhs = 0;
  std::int64_t identity_rhs = 0;
  std::int64_t nds_value = 0;
  std::vector<InductionCertificate> children;

  bool all_identities_hold() const;
  int depth() const;  // levels, >= 1
  std::size_t node_count() const;
};

// Replays the whole induction: picks the deterministic rare vertex from the
// injection certificate, checks the case identity, and recurses into the
// minors until the base case or the degree-one closed-form leaf.
InductionCertificate replay_induction(const IdealFamily& f);

}  // namespace idealfam
