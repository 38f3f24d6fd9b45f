#ifndef GPH_GRAPH_HPP
#define GPH_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace gph {

using NodeId = int;
using ArcId = int;

struct Arc {
  NodeId src;
  NodeId tgt;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// A finite directed multigraph. Nodes are the dense ids 0..num_nodes-1 and
// arcs are identified by their position in `arcs`. Loops and parallel arcs
// are allowed. Labels are optional display metadata (either empty or one
// entry per node/arc) and take no part in structural equality.
struct Graph {
  int num_nodes = 0;
  std::vector<Arc> arcs;
  std::vector<std::string> node_labels;
  std::vector<std::string> arc_labels;

  int node_count() const { return num_nodes; }
  int arc_count() const { return static_cast<int>(arcs.size()); }
  NodeId src(ArcId a) const { return arcs[a].src; }
  NodeId tgt(ArcId a) const { return arcs[a].tgt; }

  NodeId add_node() { return num_nodes++; }
  ArcId add_arc(NodeId s, NodeId t) {
    arcs.push_back(Arc{s, t});
    return arc_count() - 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes == b.num_nodes && a.arcs == b.arcs;
  }
};

// A graph morphism: a node map and an arc map commuting with source and
// target. Domain and codomain are carried by value; all values in the
// library are immutable once built.
struct GraphMorphism {
  Graph dom;
  Graph cod;
  std::vector<NodeId> node_map;
  std::vector<ArcId> arc_map;

  NodeId on_node(NodeId x) const { return node_map[x]; }
  ArcId on_arc(ArcId a) const { return arc_map[a]; }
};

// Checks the representation invariants; returns a description of the first
// violation found, or nullopt when everything is consistent.
std::optional<std::string> validate(const Graph& g);
std::optional<std::string> validate(const GraphMorphism& f);

GraphMorphism identity(const Graph& x);

// compose(f, g): apply f first, then g; requires f.cod == g.dom.
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

bool is_isomorphism(const GraphMorphism& f);

// Standard graphs. Node/arc indexing follows the usual conventions:
// path_graph(n) has nodes 0..n with arc i-1 running (i-1) -> i, and
// cycle_graph(n) has nodes 0..n-1 with arc i running i -> (i+1) mod n.
Graph node_graph();                 // one node, no arcs
Graph arc_graph();                  // two nodes, one arc 0 -> 1
Graph fork_graph();                 // nodes {0,1,2}, arcs 0->1 and 0->2
Graph path_graph(int n);            // n >= 0
Graph cycle_graph(int n);           // n >= 1 (a cycle of length 0 is just the node graph)
Graph bouquet(int loops);           // one node, `loops` loops

// Generator morphisms.
GraphMorphism source_inclusion();   // node graph -> arc graph, node onto the arc's source
GraphMorphism fold_generator();     // fork graph -> arc graph, both prongs onto the arc

// cycle_shift(n, i): node j -> j+i mod n on cycle_graph(n).
// cycle_wrap(n, m): node i -> i mod m, requires m | n.
GraphMorphism cycle_shift(int n, int i);
GraphMorphism cycle_wrap(int n, int m);

// Out-star and in-star arc lists per node, each arc appearing exactly once
// in each table.
struct LocalStars {
  std::vector<std::vector<ArcId>> out;
  std::vector<std::vector<ArcId>> in;
};
LocalStars local_stars(const Graph& g);

}  // namespace gph

#endif  // GPH_GRAPH_HPP
