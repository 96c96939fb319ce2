#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealfam/family.hpp"

namespace idealfam {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& what);
};

// Family text format:
//   n=<k>
//   <k-character 0/1 string per edge; leftmost character is vertex 0>
// Lines starting with '#' are comments; blank lines are skipped; duplicate
// edge lines are an error. Vertices in a file are always labeled 0..k-1.
SetFamily read_family(std::istream& in);
SetFamily read_family_file(const std::string& path);

// Edge bit-strings in canonical order, after compacting the labels.
std::vector<std::string> edge_bit_strings(const SetFamily& f);

// Writes the header plus one canonical-order edge line per edge. Vertex
// labels are compacted to 0..k-1 (order preserving) first, so minors
// serialize in the file's contiguous labeling.
void write_family(std::ostream& out, const SetFamily& f);
std::string family_to_string(const SetFamily& f);

// Order-preserving relabel of the ground set onto {0..k-1}.
SetFamily relabel_contiguous(const SetFamily& f);

// The fields of the analysis report emitted by the CLI.
struct FamilyReport {
  int n = 0;
  std::int64_t num_edges = 0;
  std::int64_t tsh = 0;
  std::int64_t nds = 0;
  std::vector<std::int64_t> degrees;
  std::vector<Vertex> rare_vertices;
  bool is_intersection_closed = false;
  bool is_ideal = false;
};

FamilyReport build_report(const SetFamily& f);

}  // namespace idealfam
