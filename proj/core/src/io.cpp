#include "hyperis/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hyperis/errors.hpp"

namespace hyperis {

namespace {

long read_count(std::istream& in, const char* what) {
  long value;
  if (!(in >> value) || value < 0) {
    throw ParseError(std::string("expected a non-negative ") + what);
  }
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const long n = read_count(in, "vertex count");
  const long m = read_count(in, "edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw ParseError("graph: malformed edge line " + std::to_string(i + 1));
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidParameters& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Hypergraph read_hypergraph(std::istream& in) {
  const long n = read_count(in, "vertex count");
  const long m = read_count(in, "edge count");
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    long size;
    if (!(in >> size) || size < 0) {
      throw ParseError("hypergraph: malformed size on edge line " +
                       std::to_string(i + 1));
    }
    std::vector<VertexId> edge;
    edge.reserve(size);
    for (long j = 0; j < size; ++j) {
      long v;
      if (!(in >> v) || v < 0) {
        throw ParseError("hypergraph: malformed edge line " +
                         std::to_string(i + 1));
      }
      edge.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(edge));
  }
  try {
    return Hypergraph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidParameters& e) {
    throw ParseError(e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    out << e.size();
    for (VertexId v : e) out << ' ' << v;
    out << '\n';
  }
}

void write_gadget_map(std::ostream& out, const GadgetMap& map) {
  for (int v = 0; v < map.graph_vertices; ++v) {
    out << "block " << v;
    for (VertexId id : map.blocks[v]) out << ' ' << id;
    out << '\n';
  }
  for (std::size_t j = 0; j < map.graph_edges.size(); ++j) {
    const auto& [u, v] = map.graph_edges[j];
    out << "filler " << u << ' ' << v;
    for (VertexId id : map.fillers[j]) out << ' ' << id;
    out << '\n';
  }
}

}  // namespace hyperis
