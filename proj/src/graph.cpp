#include "gph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gph {

std::optional<std::string> validate(const Graph& g) {
  if (g.num_nodes < 0) return "negative node count";
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (g.src(a) < 0 || g.src(a) >= g.num_nodes)
      return "dangling src: arc " + std::to_string(a) + " has src " +
             std::to_string(g.src(a)) + " outside 0.." +
             std::to_string(g.num_nodes - 1);
    if (g.tgt(a) < 0 || g.tgt(a) >= g.num_nodes)
      return "dangling tgt: arc " + std::to_string(a) + " has tgt " +
             std::to_string(g.tgt(a));
  }
  if (!g.node_labels.empty() &&
      static_cast<int>(g.node_labels.size()) != g.num_nodes)
    return "node label count mismatch";
  if (!g.arc_labels.empty() &&
      static_cast<int>(g.arc_labels.size()) != g.arc_count())
    return "arc label count mismatch";
  return std::nullopt;
}

std::optional<std::string> validate(const GraphMorphism& f) {
  if (auto err = validate(f.dom)) return "dom: " + *err;
  if (auto err = validate(f.cod)) return "cod: " + *err;
  if (static_cast<int>(f.node_map.size()) != f.dom.node_count())
    return "node_map is not total";
  if (static_cast<int>(f.arc_map.size()) != f.dom.arc_count())
    return "arc_map is not total";
  for (NodeId x = 0; x < f.dom.node_count(); ++x)
    if (f.node_map[x] < 0 || f.node_map[x] >= f.cod.node_count())
      return "node_map out of range at node " + std::to_string(x);
  for (ArcId a = 0; a < f.dom.arc_count(); ++a) {
    ArcId b = f.arc_map[a];
    if (b < 0 || b >= f.cod.arc_count())
      return "arc_map out of range at arc " + std::to_string(a);
    if (f.cod.src(b) != f.node_map[f.dom.src(a)])
      return "source square fails at arc " + std::to_string(a);
    if (f.cod.tgt(b) != f.node_map[f.dom.tgt(a)])
      return "target square fails at arc " + std::to_string(a);
  }
  return std::nullopt;
}

GraphMorphism identity(const Graph& x) {
  GraphMorphism f;
  f.dom = x;
  f.cod = x;
  f.node_map.resize(x.node_count());
  f.arc_map.resize(x.arc_count());
  for (NodeId v = 0; v < x.node_count(); ++v) f.node_map[v] = v;
  for (ArcId a = 0; a < x.arc_count(); ++a) f.arc_map[a] = a;
  return f;
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod == g.dom))
    throw std::invalid_argument("compose: f.cod differs from g.dom");
  GraphMorphism h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.node_map.resize(f.node_map.size());
  h.arc_map.resize(f.arc_map.size());
  for (std::size_t i = 0; i < f.node_map.size(); ++i)
    h.node_map[i] = g.node_map[f.node_map[i]];
  for (std::size_t i = 0; i < f.arc_map.size(); ++i)
    h.arc_map[i] = g.arc_map[f.arc_map[i]];
  return h;
}

namespace {

bool is_bijection(const std::vector<int>& map, int cod_size) {
  if (static_cast<int>(map.size()) != cod_size) return false;
  std::vector<char> hit(cod_size, 0);
  for (int v : map) {
    if (v < 0 || v >= cod_size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const GraphMorphism& f) {
  return is_bijection(f.node_map, f.cod.node_count()) &&
         is_bijection(f.arc_map, f.cod.arc_count());
}

Graph node_graph() {
  Graph g;
  g.num_nodes = 1;
  return g;
}

Graph arc_graph() {
  Graph g;
  g.num_nodes = 2;
  g.add_arc(0, 1);
  return g;
}

Graph fork_graph() {
  Graph g;
  g.num_nodes = 3;
  g.add_arc(0, 1);
  g.add_arc(0, 2);
  return g;
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("path_graph: negative length");
  Graph g;
  g.num_nodes = n + 1;
  for (int i = 1; i <= n; ++i) g.add_arc(i - 1, i);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 1)
    throw std::invalid_argument(
        "cycle_graph: length must be >= 1 (a cycle of length 0 is the node graph)");
  Graph g;
  g.num_nodes = n;
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

Graph bouquet(int loops) {
  if (loops < 0) throw std::invalid_argument("bouquet: negative loop count");
  Graph g;
  g.num_nodes = 1;
  for (int i = 0; i < loops; ++i) g.add_arc(0, 0);
  return g;
}

GraphMorphism source_inclusion() {
  GraphMorphism f;
  f.dom = node_graph();
  f.cod = arc_graph();
  f.node_map = {0};
  return f;
}

GraphMorphism fold_generator() {
  GraphMorphism f;
  f.dom = fork_graph();
  f.cod = arc_graph();
  f.node_map = {0, 1, 1};
  f.arc_map = {0, 0};
  return f;
}

GraphMorphism cycle_shift(int n, int i) {
  if (n < 1) throw std::invalid_argument("cycle_shift: n must be >= 1");
  GraphMorphism f;
  f.dom = cycle_graph(n);
  f.cod = f.dom;
  f.node_map.resize(n);
  f.arc_map.resize(n);
  int shift = ((i % n) + n) % n;
  for (int j = 0; j < n; ++j) {
    f.node_map[j] = (j + shift) % n;
    f.arc_map[j] = (j + shift) % n;
  }
  return f;
}

GraphMorphism cycle_wrap(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("cycle_wrap: lengths must be >= 1");
  if (n % m != 0)
    throw std::invalid_argument("cycle_wrap: " + std::to_string(m) +
                                " does not divide " + std::to_string(n));
  GraphMorphism f;
  f.dom = cycle_graph(n);
  f.cod = cycle_graph(m);
  f.node_map.resize(n);
  f.arc_map.resize(n);
  for (int j = 0; j < n; ++j) {
    f.node_map[j] = j % m;
    f.arc_map[j] = j % m;
  }
  return f;
}

LocalStars local_stars(const Graph& g) {
  LocalStars s;
  s.out.resize(g.node_count());
  s.in.resize(g.node_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    s.out[g.src(a)].push_back(a);
    s.in[g.tgt(a)].push_back(a);
  }
  return s;
}

}  // namespace gph
