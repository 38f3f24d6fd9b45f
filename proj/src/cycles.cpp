#include "gph/cycles.hpp"

#include <stdexcept>

#include "gph/constructions.hpp"

namespace gph {

std::optional<std::string> validate(const BasedCycle& c, const Graph& g) {
  const int n = c.length();
  if (n < 1) return "cycle length must be >= 1";
  if (static_cast<int>(c.nodes.size()) != n) return "node/arc count mismatch";
  for (int i = 0; i < n; ++i) {
    if (c.nodes[i] < 0 || c.nodes[i] >= g.node_count())
      return "node out of range at position " + std::to_string(i);
    if (c.arcs[i] < 0 || c.arcs[i] >= g.arc_count())
      return "arc out of range at position " + std::to_string(i);
    if (g.src(c.arcs[i]) != c.nodes[i])
      return "arc " + std::to_string(i) + " does not leave its node";
    if (g.tgt(c.arcs[i]) != c.nodes[(i + 1) % n])
      return "arc " + std::to_string(i) + " does not chain";
  }
  return std::nullopt;
}

std::vector<BasedCycle> enumerate_cycles(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_cycles: length must be >= 1");
  std::vector<BasedCycle> result;
  LocalStars stars = local_stars(g);
  BasedCycle walk;
  walk.nodes.resize(n);
  walk.arcs.resize(n);

  // Depth-first over arc choices in id order; out-star lists are in id
  // order, so the generation order is exactly lexicographic in the arc
  // sequence.
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (g.tgt(walk.arcs[n - 1]) == walk.nodes[0]) result.push_back(walk);
      return;
    }
    if (depth == 0) {
      for (ArcId a = 0; a < g.arc_count(); ++a) {
        walk.nodes[0] = g.src(a);
        walk.arcs[0] = a;
        self(self, 1);
      }
    } else {
      NodeId at = g.tgt(walk.arcs[depth - 1]);
      walk.nodes[depth] = at;
      for (ArcId a : stars.out[at]) {
        walk.arcs[depth] = a;
        self(self, depth + 1);
      }
    }
  };
  extend(extend, 0);
  return result;
}

GraphMorphism cycle_morphism(const Graph& g, const BasedCycle& c) {
  if (auto err = validate(c, g))
    throw std::invalid_argument("cycle_morphism: " + *err);
  GraphMorphism m;
  m.dom = cycle_graph(c.length());
  m.cod = g;
  m.node_map = c.nodes;
  m.arc_map = c.arcs;
  return m;
}

BasedCycle cycle_of_morphism(const GraphMorphism& m) {
  BasedCycle c;
  c.nodes = m.node_map;
  c.arcs = m.arc_map;
  return c;
}

BasedCycle image_cycle(const GraphMorphism& f, const BasedCycle& c) {
  BasedCycle image;
  image.nodes.reserve(c.nodes.size());
  image.arcs.reserve(c.arcs.size());
  for (NodeId v : c.nodes) image.nodes.push_back(f.node_map[v]);
  for (ArcId a : c.arcs) image.arcs.push_back(f.arc_map[a]);
  return image;
}

BasedCycle rotate_cycle(const BasedCycle& c, int i) {
  const int n = c.length();
  int shift = ((i % n) + n) % n;
  BasedCycle r;
  r.nodes.resize(n);
  r.arcs.resize(n);
  for (int j = 0; j < n; ++j) {
    r.nodes[j] = c.nodes[(j + shift) % n];
    r.arcs[j] = c.arcs[(j + shift) % n];
  }
  return r;
}

bool is_cycle_multiple(const BasedCycle& c) {
  const int n = c.length();
  for (int period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (int i = period; i < n && repeats; ++i) {
      if (c.arcs[i] != c.arcs[i % period] || c.nodes[i] != c.nodes[i % period])
        repeats = false;
    }
    if (repeats) return true;
  }
  return false;
}

BasedCycle least_rotation(const BasedCycle& c) {
  BasedCycle best = c;
  for (int i = 1; i < c.length(); ++i) {
    BasedCycle r = rotate_cycle(c, i);
    if (r.arcs < best.arcs) best = r;
  }
  return best;
}

bool has_cycles(const Graph& g) {
  std::vector<int> comp = strongly_connected_components(g);
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (comp[g.src(a)] == comp[g.tgt(a)]) return true;
  return false;
}

}  // namespace gph
