#include "idealfam/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idealfam {

std::vector<Vertex> vertices_of(Hyperedge e) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(e.size()));
  for_each_vertex(e, [&](Vertex v) { out.push_back(v); });
  return out;
}

std::string to_string(Hyperedge e) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(e, [&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

SetFamily::SetFamily(Hyperedge ground, std::vector<Hyperedge> edges)
    : ground_(ground), edges_(std::move(edges)) {
  if (ground_.empty()) {
    throw std::invalid_argument("ground set must be nonempty");
  }
  if (ground_.bits >> kUniverseWidth) {
    throw std::invalid_argument("vertex label exceeds universe width " +
                                std::to_string(kUniverseWidth));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i].subset_of(ground_)) {
      throw std::invalid_argument("edge " + to_string(edges_[i]) +
                                  " is not a subset of the ground set " + to_string(ground_));
    }
    if (i > 0 && edges_[i] == edges_[i - 1]) {
      throw std::invalid_argument("duplicate edge " + to_string(edges_[i]));
    }
  }
}

bool SetFamily::contains(Hyperedge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

void require_in_ground(const SetFamily& f, Vertex v) {
  if (v < 0 || v >= kUniverseWidth || !f.ground().contains(v)) {
    throw std::domain_error("vertex " + std::to_string(v) + " is not in the ground set " +
                            to_string(f.ground()));
  }
}

}  // namespace

std::int64_t degree(const SetFamily& f, Vertex v) {
  require_in_ground(f, v);
  std::int64_t d = 0;
  for (Hyperedge e : f.edges()) d += e.contains(v);
  return d;
}

std::int64_t tsh(const SetFamily& f) {
  std::int64_t total = 0;
  for (Hyperedge e : f.edges()) total += e.size();
  return total;
}

std::int64_t nds(const SetFamily& f) {
  return 2 * tsh(f) - std::int64_t{f.ground_size()} * f.edge_count();
}

bool is_rare(const SetFamily& f, Vertex v) {
  return 2 * degree(f, v) - f.edge_count() <= 0;
}

bool is_average_rare(const SetFamily& f) { return nds(f) <= 0; }

std::vector<std::int64_t> degree_sequence(const SetFamily& f) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(f.ground_size()));
  for_each_vertex(f.ground(), [&](Vertex v) { out.push_back(degree(f, v)); });
  return out;
}

std::vector<Vertex> rare_vertices(const SetFamily& f) {
  std::vector<Vertex> out;
  for_each_vertex(f.ground(), [&](Vertex v) {
    if (is_rare(f, v)) out.push_back(v);
  });
  return out;
}

std::optional<IntersectionWitness> find_intersection_violation(const SetFamily& f) {
  const auto& edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!f.contains(edges[i] & edges[j])) {
        return IntersectionWitness{edges[i], edges[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_intersection_closed(const SetFamily& f) {
  return !find_intersection_violation(f).has_value();
}

SetFamily intersection_closure(const SetFamily& generators) {
  std::vector<Hyperedge> members = generators.edges();
  std::set<Hyperedge> seen(members.begin(), members.end());
  // Every pair of final members meets once the later one reaches index i.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Hyperedge m = members[i] & members[j];
      if (seen.insert(m).second) members.push_back(m);
    }
  }
  return SetFamily(generators.ground(), std::move(members));
}

}  // namespace idealfam
