#ifndef GPH_CYCLES_HPP
#define GPH_CYCLES_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

// A based cycle of length n >= 1 in a graph: a closed walk with a marked
// start, i.e. a morphism from cycle_graph(n). Stored as the node and arc
// sequences; consecutive arcs chain head to tail and the last arc returns
// to nodes[0].
struct BasedCycle {
  std::vector<NodeId> nodes;
  std::vector<ArcId> arcs;

  int length() const { return static_cast<int>(arcs.size()); }

  friend bool operator==(const BasedCycle&, const BasedCycle&) = default;
  // Cycles are ordered by length, then lexicographically by arc sequence.
  friend std::strong_ordering operator<=>(const BasedCycle& a,
                                          const BasedCycle& b) {
    if (auto c = a.arcs.size() <=> b.arcs.size(); c != 0) return c;
    return a.arcs <=> b.arcs;
  }
};

std::optional<std::string> validate(const BasedCycle& c, const Graph& g);

// All based cycles of length exactly n, in lexicographic arc-sequence
// order. May be exponentially large; callers bound n.
std::vector<BasedCycle> enumerate_cycles(const Graph& g, int n);

// The morphism cycle_graph(c.length()) -> g described by c.
GraphMorphism cycle_morphism(const Graph& g, const BasedCycle& c);

// Recovers a based cycle from a morphism whose domain is a cycle graph.
BasedCycle cycle_of_morphism(const GraphMorphism& m);

// Image of a cycle under a morphism of its ambient graph.
BasedCycle image_cycle(const GraphMorphism& f, const BasedCycle& c);

// c composed with the shift sending node j to j+i (mod n): the same closed
// walk based i steps later.
BasedCycle rotate_cycle(const BasedCycle& c, int i);

// Whether c factors through the wrap onto a strictly shorter cycle, i.e.
// its arc sequence is periodic with some proper period dividing n.
bool is_cycle_multiple(const BasedCycle& c);

// Lexicographically least rotation, the canonical representative of the
// shift class of c.
BasedCycle least_rotation(const BasedCycle& c);

bool has_cycles(const Graph& g);

}  // namespace gph

#endif  // GPH_CYCLES_HPP
