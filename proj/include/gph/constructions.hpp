#ifndef GPH_CONSTRUCTIONS_HPP
#define GPH_CONSTRUCTIONS_HPP

#include <vector>

#include "gph/graph.hpp"
#include "gph/union_find.hpp"

// Categorical constructions in the category of directed multigraphs. All of
// them are computed elementwise (separately on nodes and on arcs) and return
// the canonical morphisms alongside the constructed graph. Quotients are
// renumbered by smallest representative so that outputs are deterministic.

namespace gph {

struct Cospan {
  Graph apex;
  std::vector<GraphMorphism> legs;  // one morphism into apex per input
};

struct Span {
  Graph apex;
  GraphMorphism left;   // projection onto the first factor
  GraphMorphism right;  // projection onto the second factor
};

// Disjoint union; ids are renumbered by concatenation order.
Cospan coproduct(const std::vector<Graph>& parts);

// Pushout of f: R -> F against g: R -> X. legs[0] is F -> apex and legs[1]
// is X -> apex, with ids of F + X renumbered by smallest representative.
// Throws std::invalid_argument when f.dom != g.dom. The commutation square
// is re-verified after construction.
Cospan pushout(const GraphMorphism& f, const GraphMorphism& g);

// Fiber product of f: X -> Y and g: Z -> Y: nodes are pairs (x, z) with
// f(x) = g(z) in lexicographic order, and likewise for arcs. Throws
// std::invalid_argument when f.cod != g.cod.
Span fiber_product(const GraphMorphism& f, const GraphMorphism& g);

// Elementwise product (node pairs, arc pairs).
Span product(const Graph& x, const Graph& y);

// Strongly connected components; returns one component id per node.
// Component ids are assigned in increasing order of the smallest node id
// they contain.
std::vector<int> strongly_connected_components(const Graph& g);

// The subgraph of all nodes and arcs lying on at least one closed walk: an
// arc belongs to the core iff its endpoints share a strongly connected
// component, and a node iff it is an endpoint of such an arc.
struct CoreResult {
  Graph core;
  GraphMorphism inclusion;          // core -> g
  std::vector<char> node_in_core;   // per node of g
  std::vector<char> arc_in_core;    // per arc of g
};
CoreResult core(const Graph& g);

// Nodes reachable from `start` by directed paths (including start itself).
std::vector<char> reachable_from(const Graph& g, NodeId start);

// Quotient of g by the given equivalences on nodes and arcs, renumbered by
// smallest class representative. Source/target coherence of the arc classes
// is re-checked and an InternalCheckError is thrown on inconsistency.
struct Quotient {
  Graph graph;
  GraphMorphism projection;  // g -> graph
};
Quotient quotient(const Graph& g, UnionFind& nodes, UnionFind& arcs);

// Rooted tree to be grafted: node k of the tree is attached below
// parent[k], where parent[k] == -1 means the attach node of the host graph
// and otherwise refers to an earlier tree node (parent[k] < k).
struct TreeSpec {
  NodeId attach;
  std::vector<int> parent;
};

// Grafts a rooted forest onto x: fresh nodes and arcs are appended in spec
// order (tree by tree, node by node). Returns the inclusion x -> x_F.
GraphMorphism attach_forest(const Graph& x, const std::vector<TreeSpec>& forest);

}  // namespace gph

#endif  // GPH_CONSTRUCTIONS_HPP
