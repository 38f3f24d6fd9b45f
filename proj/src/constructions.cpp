#include "gph/constructions.hpp"

#include <algorithm>
#include <map>
#include <stack>
#include <stdexcept>
#include <utility>

#include "gph/errors.hpp"

namespace gph {

Cospan coproduct(const std::vector<Graph>& parts) {
  Cospan result;
  int node_base = 0;
  int arc_base = 0;
  for (const Graph& part : parts) {
    GraphMorphism inj;
    inj.dom = part;
    inj.node_map.resize(part.node_count());
    inj.arc_map.resize(part.arc_count());
    for (NodeId v = 0; v < part.node_count(); ++v)
      inj.node_map[v] = node_base + v;
    for (ArcId a = 0; a < part.arc_count(); ++a) inj.arc_map[a] = arc_base + a;
    result.legs.push_back(std::move(inj));
    node_base += part.node_count();
    arc_base += part.arc_count();
  }
  result.apex.num_nodes = node_base;
  result.apex.arcs.reserve(arc_base);
  int offset = 0;
  for (const Graph& part : parts) {
    for (const Arc& arc : part.arcs)
      result.apex.arcs.push_back(Arc{arc.src + offset, arc.tgt + offset});
    offset += part.node_count();
  }
  for (GraphMorphism& leg : result.legs) leg.cod = result.apex;
  return result;
}

Quotient quotient(const Graph& g, UnionFind& nodes, UnionFind& arcs) {
  Quotient q;
  // Number classes by their smallest member.
  std::vector<NodeId> node_label(g.node_count(), -1);
  int next_node = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int root = nodes.find(v);
    if (node_label[root] == -1) node_label[root] = next_node++;
  }
  std::vector<ArcId> arc_label(g.arc_count(), -1);
  int next_arc = 0;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    int root = arcs.find(a);
    if (arc_label[root] == -1) arc_label[root] = next_arc++;
  }

  q.graph.num_nodes = next_node;
  q.graph.arcs.assign(next_arc, Arc{-1, -1});
  q.projection.dom = g;
  q.projection.node_map.resize(g.node_count());
  q.projection.arc_map.resize(g.arc_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    q.projection.node_map[v] = node_label[nodes.find(v)];
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    ArcId image = arc_label[arcs.find(a)];
    q.projection.arc_map[a] = image;
    Arc expected{q.projection.node_map[g.src(a)],
                 q.projection.node_map[g.tgt(a)]};
    Arc& slot = q.graph.arcs[image];
    if (slot.src == -1) {
      slot = expected;
    } else if (!(slot == expected)) {
      // Merged arcs whose endpoints were not merged: the relation was not
      // closed under the incidence maps.
      throw InternalCheckError("quotient: inconsistent arc class " +
                               std::to_string(image));
    }
  }
  q.projection.cod = q.graph;
  return q;
}

Cospan pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.dom == g.dom))
    throw std::invalid_argument("pushout: legs have different domains");
  Cospan sum = coproduct({f.cod, g.cod});
  UnionFind nodes(sum.apex.node_count());
  UnionFind arcs(sum.apex.arc_count());
  for (NodeId r = 0; r < f.dom.node_count(); ++r)
    nodes.merge(sum.legs[0].node_map[f.node_map[r]],
                sum.legs[1].node_map[g.node_map[r]]);
  for (ArcId r = 0; r < f.dom.arc_count(); ++r)
    arcs.merge(sum.legs[0].arc_map[f.arc_map[r]],
               sum.legs[1].arc_map[g.arc_map[r]]);
  Quotient q = quotient(sum.apex, nodes, arcs);

  Cospan result;
  result.apex = q.graph;
  result.legs.push_back(compose(sum.legs[0], q.projection));
  result.legs.push_back(compose(sum.legs[1], q.projection));

  // The square commutes by construction; verify anyway.
  GraphMorphism via_f = compose(f, result.legs[0]);
  GraphMorphism via_g = compose(g, result.legs[1]);
  if (via_f.node_map != via_g.node_map || via_f.arc_map != via_g.arc_map)
    throw InternalCheckError("pushout: square does not commute");
  return result;
}

Span fiber_product(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.cod == g.cod))
    throw std::invalid_argument("fiber_product: legs have different codomains");
  Span result;
  GraphMorphism& p1 = result.left;
  GraphMorphism& p2 = result.right;
  for (NodeId x = 0; x < f.dom.node_count(); ++x)
    for (NodeId z = 0; z < g.dom.node_count(); ++z)
      if (f.node_map[x] == g.node_map[z]) {
        result.apex.add_node();
        p1.node_map.push_back(x);
        p2.node_map.push_back(z);
      }
  // Index of pair (x, z) among apex nodes.
  std::map<std::pair<NodeId, NodeId>, NodeId> node_index;
  for (NodeId v = 0; v < result.apex.node_count(); ++v)
    node_index[{p1.node_map[v], p2.node_map[v]}] = v;
  for (ArcId a = 0; a < f.dom.arc_count(); ++a)
    for (ArcId b = 0; b < g.dom.arc_count(); ++b)
      if (f.arc_map[a] == g.arc_map[b]) {
        NodeId s = node_index.at({f.dom.src(a), g.dom.src(b)});
        NodeId t = node_index.at({f.dom.tgt(a), g.dom.tgt(b)});
        result.apex.add_arc(s, t);
        p1.arc_map.push_back(a);
        p2.arc_map.push_back(b);
      }
  p1.dom = result.apex;
  p2.dom = result.apex;
  p1.cod = f.dom;
  p2.cod = g.dom;
  return result;
}

Span product(const Graph& x, const Graph& y) {
  Span result;
  result.apex.num_nodes = x.node_count() * y.node_count();
  GraphMorphism& p1 = result.left;
  GraphMorphism& p2 = result.right;
  p1.node_map.resize(result.apex.node_count());
  p2.node_map.resize(result.apex.node_count());
  for (NodeId u = 0; u < x.node_count(); ++u)
    for (NodeId v = 0; v < y.node_count(); ++v) {
      NodeId id = u * y.node_count() + v;
      p1.node_map[id] = u;
      p2.node_map[id] = v;
    }
  for (ArcId a = 0; a < x.arc_count(); ++a)
    for (ArcId b = 0; b < y.arc_count(); ++b) {
      NodeId s = x.src(a) * y.node_count() + y.src(b);
      NodeId t = x.tgt(a) * y.node_count() + y.tgt(b);
      result.apex.add_arc(s, t);
      p1.arc_map.push_back(a);
      p2.arc_map.push_back(b);
    }
  p1.dom = result.apex;
  p2.dom = result.apex;
  p1.cod = x;
  p2.cod = y;
  return result;
}

std::vector<int> strongly_connected_components(const Graph& g) {
  // Iterative Tarjan; arcs explored in id order for determinism.
  const int n = g.node_count();
  LocalStars stars = local_stars(g);
  std::vector<int> comp(n, -1), index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  int comp_count = 0;

  struct Frame {
    NodeId v;
    std::size_t next_arc;
  };
  for (NodeId start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.next_arc < stars.out[fr.v].size()) {
        ArcId a = stars.out[fr.v][fr.next_arc++];
        NodeId w = g.tgt(a);
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[fr.v] = std::min(lowlink[fr.v], index[w]);
        }
      } else {
        if (lowlink[fr.v] == index[fr.v]) {
          while (true) {
            NodeId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == fr.v) break;
          }
          ++comp_count;
        }
        NodeId finished = fr.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] =
              std::min(lowlink[frames.back().v], lowlink[finished]);
      }
    }
  }
  // Renumber components by their smallest node.
  std::vector<int> relabel(comp_count, -1);
  int next = 0;
  for (NodeId v = 0; v < n; ++v)
    if (relabel[comp[v]] == -1) relabel[comp[v]] = next++;
  for (NodeId v = 0; v < n; ++v) comp[v] = relabel[comp[v]];
  return comp;
}

CoreResult core(const Graph& g) {
  CoreResult result;
  std::vector<int> comp = strongly_connected_components(g);
  result.node_in_core.assign(g.node_count(), 0);
  result.arc_in_core.assign(g.arc_count(), 0);
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (comp[g.src(a)] == comp[g.tgt(a)]) {
      result.arc_in_core[a] = 1;
      result.node_in_core[g.src(a)] = 1;
      result.node_in_core[g.tgt(a)] = 1;
    }
  std::vector<NodeId> node_of(g.node_count(), -1);
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (result.node_in_core[v]) {
      node_of[v] = result.core.add_node();
      result.inclusion.node_map.push_back(v);
    }
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (result.arc_in_core[a]) {
      result.core.add_arc(node_of[g.src(a)], node_of[g.tgt(a)]);
      result.inclusion.arc_map.push_back(a);
    }
  result.inclusion.dom = result.core;
  result.inclusion.cod = g;
  return result;
}

std::vector<char> reachable_from(const Graph& g, NodeId start) {
  std::vector<char> seen(g.node_count(), 0);
  LocalStars stars = local_stars(g);
  std::vector<NodeId> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    NodeId v = todo.back();
    todo.pop_back();
    for (ArcId a : stars.out[v])
      if (!seen[g.tgt(a)]) {
        seen[g.tgt(a)] = 1;
        todo.push_back(g.tgt(a));
      }
  }
  return seen;
}

GraphMorphism attach_forest(const Graph& x, const std::vector<TreeSpec>& forest) {
  Graph grown = x;
  for (const TreeSpec& tree : forest) {
    if (tree.attach < 0 || tree.attach >= x.node_count())
      throw std::invalid_argument("attach_forest: attach node out of range");
    std::vector<NodeId> placed(tree.parent.size());
    for (std::size_t k = 0; k < tree.parent.size(); ++k) {
      int p = tree.parent[k];
      if (p < -1 || p >= static_cast<int>(k))
        throw std::invalid_argument("attach_forest: bad parent index");
      NodeId parent_node = p == -1 ? tree.attach : placed[p];
      NodeId fresh = grown.add_node();
      grown.add_arc(parent_node, fresh);
      placed[k] = fresh;
    }
  }
  GraphMorphism inc;
  inc.dom = x;
  inc.cod = grown;
  inc.node_map.resize(x.node_count());
  inc.arc_map.resize(x.arc_count());
  for (NodeId v = 0; v < x.node_count(); ++v) inc.node_map[v] = v;
  for (ArcId a = 0; a < x.arc_count(); ++a) inc.arc_map[a] = a;
  return inc;
}

}  // namespace gph
