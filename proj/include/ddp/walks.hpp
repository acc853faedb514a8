#pragma once

#include "ddp/graph.hpp"
#include "ddp/intmatrix.hpp"

namespace ddp {

// Entry (u,v) counts walks from u to v of every length 0..i that never
// immediately retrace an edge. Counted by direct enumeration, so it serves
// as an independent oracle for the polynomial-of-adjacency route. Requires a
// regular graph and i <= 6 (the enumeration is exponential in i).
IntMatrix nb_walk_counts(const Graph& g, int i);

}  // namespace ddp
