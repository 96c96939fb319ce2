#include "idealfam/minors.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealfam {

std::optional<MinorKind> parse_minor_kind(std::string_view name) {
  if (name == "del") return MinorKind::kDeletion;
  if (name == "delp") return MinorKind::kIdealDeletion;
  if (name == "con") return MinorKind::kContraction;
  if (name == "trace") return MinorKind::kTrace;
  return std::nullopt;
}

std::string_view minor_kind_name(MinorKind kind) {
  switch (kind) {
    case MinorKind::kDeletion: return "del";
    case MinorKind::kIdealDeletion: return "delp";
    case MinorKind::kContraction: return "con";
    case MinorKind::kTrace: return "trace";
  }
  return "?";
}

namespace {

void require_minor_preconditions(const SetFamily& f, Vertex v) {
  if (f.ground_size() < 2) {
    throw std::domain_error("minor operators require a ground set of size at least two");
  }
  if (v < 0 || v >= kUniverseWidth || !f.ground().contains(v)) {
    throw std::domain_error("vertex " + std::to_string(v) + " is not in the ground set " +
                            to_string(f.ground()));
  }
}

}  // namespace

SetFamily deletion(const SetFamily& f, Vertex v) {
  require_minor_preconditions(f, v);
  std::vector<Hyperedge> kept;
  for (Hyperedge e : f.edges()) {
    if (!e.contains(v)) kept.push_back(e);
  }
  return SetFamily(f.ground().without(v), std::move(kept));
}

IdealFamily ideal_deletion(const IdealFamily& ideal, Vertex v) {
  SetFamily del = deletion(ideal.family(), v);
  std::vector<Hyperedge> edges = del.edges();
  if (!del.contains(del.ground())) edges.push_back(del.ground());
  return IdealFamily::unchecked(SetFamily(del.ground(), std::move(edges)));
}

SetFamily contraction(const SetFamily& f, Vertex v) {
  require_minor_preconditions(f, v);
  std::vector<Hyperedge> stripped;
  for (Hyperedge e : f.edges()) {
    if (e.contains(v)) stripped.push_back(e.without(v));
  }
  if (stripped.empty()) {
    throw std::domain_error("contraction at vertex " + std::to_string(v) + " of degree 0");
  }
  return SetFamily(f.ground().without(v), std::move(stripped));
}

IdealFamily contraction_ideal(const IdealFamily& ideal, Vertex v) {
  const SetFamily& f = ideal.family();
  require_minor_preconditions(f, v);
  if (!f.contains(Hyperedge::of({v}))) {
    throw std::domain_error("contraction of an ideal family requires {" + std::to_string(v) +
                            "} to be an edge");
  }
  return IdealFamily::unchecked(contraction(f, v));
}

SetFamily trace(const SetFamily& f, Vertex v) {
  require_minor_preconditions(f, v);
  std::vector<Hyperedge> stripped;
  stripped.reserve(f.edges().size());
  for (Hyperedge e : f.edges()) stripped.push_back(e.without(v));
  std::sort(stripped.begin(), stripped.end());
  stripped.erase(std::unique(stripped.begin(), stripped.end()), stripped.end());
  return SetFamily(f.ground().without(v), std::move(stripped));
}

bool degree_one_characterization(const IdealFamily& ideal, Vertex v) {
  const SetFamily& f = ideal.family();
  require_minor_preconditions(f, v);
  const bool singleton_edge = f.contains(Hyperedge::of({v}));
  const bool degree_is_one = degree(f, v) == 1;
  if (singleton_edge == degree_is_one) {
    throw std::logic_error("degree-one characterization failed at vertex " + std::to_string(v));
  }
  return singleton_edge;
}

bool DecompositionReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.holds(); });
}

DecompositionReport check_decomposition_identities(const IdealFamily& ideal, Vertex v) {
  const SetFamily& f = ideal.family();
  require_minor_preconditions(f, v);

  const SetFamily del = deletion(f, v);
  const SetFamily con = contraction(f, v);  // degree >= 1: the ground set contains v
  const IdealFamily delp = ideal_deletion(ideal, v);
  const std::int64_t n = f.ground_size();

  DecompositionReport report;
  report.vertex = v;
  report.checks.push_back({"edge_count_split", f.edge_count(), con.edge_count() + del.edge_count()});
  report.checks.push_back({"tsh_split", tsh(f), tsh(con) + tsh(del) + degree(f, v)});

  const bool has_uv = f.contains(f.ground().without(v));
  if (has_uv) {
    report.checks.push_back({"deletion_count_bridge", del.edge_count(), delp.family().edge_count()});
    report.checks.push_back({"deletion_tsh_bridge", tsh(del), tsh(delp.family())});
    report.checks.push_back({"deletion_nds_bridge", nds(del), nds(delp.family())});
  } else {
    report.checks.push_back(
        {"deletion_count_bridge", del.edge_count(), delp.family().edge_count() - 1});
    report.checks.push_back({"deletion_tsh_bridge", tsh(del), tsh(delp.family()) - (n - 1)});
    report.checks.push_back({"deletion_nds_bridge", nds(del), nds(delp.family()) - n + 1});
  }
  return report;
}

}  // namespace idealfam
