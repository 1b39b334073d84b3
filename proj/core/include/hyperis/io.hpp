#pragma once

#include <iosfwd>
#include <string>

#include "hyperis/graph.hpp"
#include "hyperis/hypergraph.hpp"
#include "hyperis/reduction.hpp"

namespace hyperis {

// Text formats, all 0-based decimal ids.
//
// graph:       "n m" then m lines "u v"
// hypergraph:  "n m" then m lines "s v1 ... vs"
// gadget map:  lines "block v id1 ... id_b" and "filler u v id1 ... id_f"

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

void write_gadget_map(std::ostream& out, const GadgetMap& map);

}  // namespace hyperis
