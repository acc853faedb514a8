#pragma once

#include <string>
#include <vector>

#include "ddp/graph.hpp"

namespace ddp {

Graph petersen();            // (3,2) Moore graph, order 10
Graph heawood();             // bipartite (3,3) extremal graph, order 14
Graph hoffman_singleton();   // (7,2) Moore graph, order 50
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph k33();                 // complete bipartite K_{3,3}

// Lookup by name: "petersen", "heawood", "hoffman_singleton", "k33",
// "complete(n)", "cycle(n)". Throws std::invalid_argument on anything else.
Graph corpus_graph(const std::string& name);

std::vector<std::string> corpus_names();

}  // namespace ddp
