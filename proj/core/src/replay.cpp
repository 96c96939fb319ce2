#include "idealfam/replay.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealfam/minors.hpp"

namespace idealfam {

std::string_view case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kBase: return "Base";
    case CaseTag::kDeg1WithUV: return "Deg1WithUV";
    case CaseTag::kDeg1NoUV: return "Deg1NoUV";
    case CaseTag::kDegGe2WithUV: return "DegGe2WithUV";
    case CaseTag::kDegGe2NoUV: return "DegGe2NoUV";
  }
  return "?";
}

CaseTag classify_case(const IdealFamily& ideal, Vertex v) {
  const SetFamily& f = ideal.family();
  if (v < 0 || v >= kUniverseWidth || !f.ground().contains(v)) {
    throw std::domain_error("vertex " + std::to_string(v) + " is not in the ground set " +
                            to_string(f.ground()));
  }
  if (!is_rare(f, v)) {
    throw std::domain_error("vertex " + std::to_string(v) + " is not rare");
  }
  if (f.ground_size() == 1) return CaseTag::kBase;
  const bool has_uv = f.contains(f.ground().without(v));
  if (degree(f, v) == 1) {
    return has_uv ? CaseTag::kDeg1WithUV : CaseTag::kDeg1NoUV;
  }
  return has_uv ? CaseTag::kDegGe2WithUV : CaseTag::kDegGe2NoUV;
}

CaseIdentity check_case_identity(const IdealFamily& ideal, Vertex v, CaseTag tag) {
  if (classify_case(ideal, v) != tag) {
    throw std::domain_error("case tag does not match the family and vertex");
  }
  const SetFamily& f = ideal.family();
  const std::int64_t n = f.ground_size();
  const std::int64_t lhs = nds(f);

  switch (tag) {
    case CaseTag::kBase:
      return {lhs, 0};

    case CaseTag::kDeg1WithUV: {
      // Downward closure of U \ {v} plus degree(v) = 1 force the shape
      // {H : v not in H} ∪ {U}; anything else is an implementation bug.
      std::vector<Hyperedge> expected;
      const std::uint32_t rest = f.ground().without(v).bits;
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        expected.push_back(Hyperedge{sub});
        if (sub == 0) break;
      }
      expected.push_back(f.ground());
      if (SetFamily(f.ground(), std::move(expected)).edges() != f.edges()) {
        throw std::logic_error("degree-one case: family is not {H : v not in H} plus U");
      }
      return {lhs, n - (std::int64_t{1} << (n - 1))};
    }

    case CaseTag::kDeg1NoUV: {
      const IdealFamily delp = ideal_deletion(ideal, v);
      if (delp.family().edge_count() < 2) {
        throw std::logic_error("ideal deletion lost the empty or ground set");
      }
      return {lhs, nds(delp.family()) + 2 - delp.family().edge_count()};
    }

    case CaseTag::kDegGe2WithUV:
    case CaseTag::kDegGe2NoUV: {
      const IdealFamily delp = ideal_deletion(ideal, v);
      const IdealFamily con = contraction_ideal(ideal, v);
      std::int64_t rhs =
          nds(delp.family()) + nds(con.family()) + 2 * degree(f, v) - f.edge_count();
      if (tag == CaseTag::kDegGe2NoUV) rhs -= n - 1;
      return {lhs, rhs};
    }
  }
  throw std::logic_error("unhandled case tag");
}

bool InductionCertificate::all_identities_hold() const {
  if (identity_lhs != identity_rhs) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const InductionCertificate& c) { return c.all_identities_hold(); });
}

int InductionCertificate::depth() const {
  int deepest = 0;
  for (const InductionCertificate& c : children) deepest = std::max(deepest, c.depth());
  return 1 + deepest;
}

std::size_t InductionCertificate::node_count() const {
  std::size_t count = 1;
  for (const InductionCertificate& c : children) count += c.node_count();
  return count;
}

InductionCertificate replay_induction(const IdealFamily& ideal) {
  const Vertex v = rare_vertex_certificate(ideal).vertex;
  const CaseTag tag = classify_case(ideal, v);
  const CaseIdentity identity = check_case_identity(ideal, v, tag);
  InductionCertificate cert{ideal,        v,            tag, identity.lhs,
                            identity.rhs, nds(ideal.family()), {}};
  switch (tag) {
    case CaseTag::kBase:
    case CaseTag::kDeg1WithUV:
      break;
    case CaseTag::kDeg1NoUV:
      cert.children.push_back(replay_induction(ideal_deletion(ideal, v)));
      break;
    case CaseTag::kDegGe2WithUV:
    case CaseTag::kDegGe2NoUV:
      cert.children.push_back(replay_induction(ideal_deletion(ideal, v)));
      cert.children.push_back(replay_induction(contraction_ideal(ideal, v)));
      break;
  }
  return cert;
}

}  // namespace idealfam
