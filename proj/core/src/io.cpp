#include "idealfam/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "idealfam/ideal.hpp"

namespace idealfam {

ParseError::ParseError(int line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
      line(line_number) {}

namespace {

void trim(std::string& s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && is_space(s[start])) ++start;
  s.erase(0, start);
}

}  // namespace

SetFamily read_family(std::istream& in) {
  std::string line;
  int line_number = 0;
  int n = -1;
  std::vector<Hyperedge> edges;
  std::unordered_set<std::uint32_t> seen;

  while (std::getline(in, line)) {
    ++line_number;
    trim(line);
    if (line.empty() || line[0] == '#') continue;

    if (n < 0) {
      if (!line.starts_with("n=")) {
        throw ParseError(line_number, "expected header n=<k>, got \"" + line + "\"");
      }
      int value = 0;
      const char* first = line.data() + 2;
      const char* last = line.data() + line.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_number, "malformed header \"" + line + "\"");
      }
      if (value < 1 || value > kUniverseWidth) {
        throw ParseError(line_number, "ground size " + std::to_string(value) +
                                          " out of range [1, " + std::to_string(kUniverseWidth) +
                                          "]");
      }
      n = value;
      continue;
    }

    if (static_cast<int>(line.size()) != n) {
      throw ParseError(line_number, "edge line has " + std::to_string(line.size()) +
                                        " characters, expected " + std::to_string(n));
    }
    std::uint32_t bits = 0;
    for (int j = 0; j < n; ++j) {
      if (line[static_cast<std::size_t>(j)] == '1') {
        bits |= std::uint32_t{1} << j;
      } else if (line[static_cast<std::size_t>(j)] != '0') {
        throw ParseError(line_number, std::string("invalid character '") +
                                          line[static_cast<std::size_t>(j)] + "' in edge line");
      }
    }
    if (!seen.insert(bits).second) {
      throw ParseError(line_number, "duplicate edge line \"" + line + "\"");
    }
    edges.push_back(Hyperedge{bits});
  }

  if (n < 0) throw ParseError(line_number, "missing header n=<k>");
  return SetFamily(full_ground(n), std::move(edges));
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return read_family(in);
}

SetFamily relabel_contiguous(const SetFamily& f) {
  const int k = f.ground_size();
  if (f.ground() == full_ground(k)) return f;
  // Order-preserving compaction keeps the canonical edge order intact.
  std::array<int, kUniverseWidth> new_label{};
  int next = 0;
  for_each_vertex(f.ground(), [&](Vertex v) { new_label[static_cast<std::size_t>(v)] = next++; });
  std::vector<Hyperedge> edges;
  edges.reserve(f.edges().size());
  for (Hyperedge e : f.edges()) {
    Hyperedge mapped;
    for_each_vertex(e, [&](Vertex v) {
      mapped = mapped.with(new_label[static_cast<std::size_t>(v)]);
    });
    edges.push_back(mapped);
  }
  return SetFamily(full_ground(k), std::move(edges));
}

std::vector<std::string> edge_bit_strings(const SetFamily& f) {
  const SetFamily compact = relabel_contiguous(f);
  const int n = compact.ground_size();
  std::vector<std::string> out;
  out.reserve(compact.edges().size());
  for (Hyperedge e : compact.edges()) {
    std::string line(static_cast<std::size_t>(n), '0');
    for_each_vertex(e, [&](Vertex v) { line[static_cast<std::size_t>(v)] = '1'; });
    out.push_back(std::move(line));
  }
  return out;
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "n=" << f.ground_size() << "\n";
  for (const std::string& line : edge_bit_strings(f)) out << line << "\n";
}

std::string family_to_string(const SetFamily& f) {
  std::ostringstream out;
  write_family(out, f);
  return out.str();
}

FamilyReport build_report(const SetFamily& f) {
  FamilyReport report;
  report.n = f.ground_size();
  report.num_edges = f.edge_count();
  report.tsh = tsh(f);
  report.nds = nds(f);
  report.degrees = degree_sequence(f);
  report.rare_vertices = rare_vertices(f);
  report.is_intersection_closed = is_intersection_closed(f);
  report.is_ideal = !find_ideal_violation(f).has_value();
  return report;
}

}  // namespace idealfam
