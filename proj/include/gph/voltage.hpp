#ifndef GPH_VOLTAGE_HPP
#define GPH_VOLTAGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

// A permutation voltage assignment on a base graph: a fiber {0..k-1} and one
// permutation of the fiber per arc. Its derived graph projects onto the base
// by a covering that is surjective on nodes.
struct VoltageAssignment {
  Graph base;
  int fiber = 1;
  std::vector<std::vector<int>> perm;  // perm[a][i]: where arc a sends fiber point i
};

std::optional<std::string> validate(const VoltageAssignment& v);

// Builds the derived graph (nodes base x fiber, arc (a, i) running from
// (src a, i) to (tgt a, perm[a][i])) and returns the projection morphism
// derived -> base. Node (y, i) has id y*k + i, and likewise for arcs.
GraphMorphism build_covering(const VoltageAssignment& v);

}  // namespace gph

#endif  // GPH_VOLTAGE_HPP
