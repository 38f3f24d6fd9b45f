#include "gph/voltage.hpp"

#include <vector>

namespace gph {

std::optional<std::string> validate(const VoltageAssignment& v) {
  if (auto err = validate(v.base)) return "base: " + *err;
  if (v.fiber < 1) return "fiber size must be >= 1";
  if (static_cast<int>(v.perm.size()) != v.base.arc_count())
    return "one permutation per arc required";
  for (ArcId a = 0; a < v.base.arc_count(); ++a) {
    if (static_cast<int>(v.perm[a].size()) != v.fiber)
      return "permutation size mismatch at arc " + std::to_string(a);
    std::vector<char> hit(v.fiber, 0);
    for (int image : v.perm[a]) {
      if (image < 0 || image >= v.fiber || hit[image])
        return "not a permutation at arc " + std::to_string(a);
      hit[image] = 1;
    }
  }
  return std::nullopt;
}

GraphMorphism build_covering(const VoltageAssignment& v) {
  if (auto err = validate(v))
    throw std::invalid_argument("build_covering: " + *err);
  const int k = v.fiber;
  GraphMorphism proj;
  proj.cod = v.base;
  proj.dom.num_nodes = v.base.node_count() * k;
  proj.node_map.resize(proj.dom.num_nodes);
  for (NodeId y = 0; y < v.base.node_count(); ++y)
    for (int i = 0; i < k; ++i) proj.node_map[y * k + i] = y;
  for (ArcId a = 0; a < v.base.arc_count(); ++a)
    for (int i = 0; i < k; ++i) {
      proj.dom.add_arc(v.base.src(a) * k + i, v.base.tgt(a) * k + v.perm[a][i]);
      proj.arc_map.push_back(a);
    }
  return proj;
}

}  // namespace gph
