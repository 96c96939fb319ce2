#include "idealfam/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace idealfam {

std::string IdealViolation::message() const {
  switch (axiom) {
    case IdealAxiom::kHasEmptySet:
      return "axiom 1: the empty set is not an edge";
    case IdealAxiom::kHasGroundSet:
      return "axiom 2: the ground set is not an edge";
    case IdealAxiom::kDownwardClosed:
      return "axiom 3: edge " + to_string(edge) + " is present but its subset " +
             to_string(missing) + " is missing";
  }
  return "unknown axiom";
}

std::optional<IdealViolation> find_ideal_violation(const SetFamily& f) {
  if (!f.contains(Hyperedge{})) {
    return IdealViolation{IdealAxiom::kHasEmptySet, {}, {}};
  }
  if (!f.contains(f.ground())) {
    return IdealViolation{IdealAxiom::kHasGroundSet, {}, {}};
  }
  for (Hyperedge e : f.edges()) {
    if (e == f.ground()) continue;
    for (std::uint32_t m = e.bits; m != 0; m &= m - 1) {
      const Hyperedge sub = e.without(static_cast<Vertex>(std::countr_zero(m)));
      if (!f.contains(sub)) {
        return IdealViolation{IdealAxiom::kDownwardClosed, e, sub};
      }
    }
  }
  return std::nullopt;
}

std::variant<IdealFamily, IdealViolation> IdealFamily::validate(SetFamily f) {
  if (auto violation = find_ideal_violation(f)) return *violation;
  return IdealFamily(std::move(f));
}

IdealFamily IdealFamily::require(SetFamily f) {
  if (auto violation = find_ideal_violation(f)) {
    throw std::domain_error("not an ideal family: " + violation->message());
  }
  return IdealFamily(std::move(f));
}

IdealFamily IdealFamily::unchecked(SetFamily f) {
  assert(!find_ideal_violation(f).has_value());
  return IdealFamily(std::move(f));
}

bool RareVertexCertificate::verify(const SetFamily& f) const {
  std::vector<Hyperedge> sources;
  std::vector<Hyperedge> targets;
  sources.reserve(mapping.size());
  targets.reserve(mapping.size());
  for (const auto& [source, target] : mapping) {
    sources.push_back(source);
    targets.push_back(target);
  }

  std::vector<Hyperedge> expected_domain;
  for (Hyperedge e : f.edges()) {
    if (e.contains(vertex)) expected_domain.push_back(e);
  }
  std::sort(sources.begin(), sources.end());
  if (sources != expected_domain) return false;

  for (Hyperedge t : targets) {
    if (t.contains(vertex)) return false;
    if (!f.contains(t)) return false;
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;

  return 2 * static_cast<std::int64_t>(mapping.size()) - f.edge_count() <= 0;
}

RareVertexCertificate rare_vertex_certificate(const IdealFamily& ideal) {
  const SetFamily& f = ideal.family();
  const Hyperedge ground = f.ground();

  // Canonically smallest maximal non-ground edge. The non-ground edges form
  // a downward-closed family, so maximality only needs one-vertex
  // extensions: e has a proper superset in F \ {U} iff some e ∪ {w} is one.
  Hyperedge maximal;
  bool found = false;
  for (Hyperedge e : f.edges()) {
    if (e == ground) continue;
    bool is_maximal = true;
    for (std::uint32_t rest = ground.bits & ~e.bits; rest != 0; rest &= rest - 1) {
      const Hyperedge grown = e.with(static_cast<Vertex>(std::countr_zero(rest)));
      if (grown != ground && f.contains(grown)) {
        is_maximal = false;
        break;
      }
    }
    if (is_maximal) {
      maximal = e;
      found = true;
      break;
    }
  }
  if (!found) {
    // Unreachable for a valid ideal family: the empty set is a non-ground edge.
    throw std::logic_error("ideal family has no maximal non-ground edge");
  }

  RareVertexCertificate cert;
  cert.vertex = static_cast<Vertex>(std::countr_zero(ground.bits & ~maximal.bits));
  cert.maximal_edge = maximal;
  for (Hyperedge e : f.edges()) {
    if (!e.contains(cert.vertex)) continue;
    cert.mapping.emplace_back(e, e == ground ? maximal : e.without(cert.vertex));
  }
  return cert;
}

}  // namespace idealfam
