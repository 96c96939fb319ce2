#pragma once

#include "idealfam/family.hpp"
#include "idealfam/ideal.hpp"

// Stock families used by the CLI `examples` subcommand, the tests, and the
// benchmarks.

namespace idealfam {

// All 2^n subsets of {0..n-1}. nds is 0 for every n.
SetFamily power_set_family(int n);
IdealFamily power_set_ideal(int n);

// Every subset avoiding v, plus the ground set: the family with a degree-one
// vertex and the large hyperedge U \ {v}. Exactly:
//   |F| = 2^(n-1) + 1,  tsh = (n-1)*2^(n-2) + n,  nds = n - 2^(n-1).
IdealFamily degree_one_family(int n, Vertex v);

// Seven-edge ideal family on three vertices with degrees (4, 3, 3),
// tsh = 10, nds = -1.
IdealFamily example_ideal_family_3();

// {∅, {0}, {0,1}, {0,2}, {0,1,2}}: intersection-closed, contains the empty
// and ground sets, but nds = +1. The smallest stock witness that
// intersection-closedness alone does not give average rarity.
SetFamily example_positive_nds_family_3();

}  // namespace idealfam
