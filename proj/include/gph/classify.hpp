#ifndef GPH_CLASSIFY_HPP
#define GPH_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gph/cycles.hpp"
#include "gph/graph.hpp"
#include "gph/zeta.hpp"

// Membership tests for the morphism classes: Surjecting, Injecting,
// Covering, Whiskering, Folding, Acyclic and acyclic fibration. Every
// negative answer carries a witness; the factorization algorithms consume
// witnesses as repair targets.

namespace gph {

// Witness that f is not surjecting: a cod arc leaving f(node) with no
// preimage in the out-star of node.
struct SurjectingWitness {
  NodeId node;
  ArcId missing_cod_arc;
};
struct SurjectingResult {
  bool ok = false;
  std::optional<SurjectingWitness> witness;
};
SurjectingResult is_surjecting(const GraphMorphism& f);

// Witness that f is not injecting: two distinct arcs out of `node` with
// the same image.
struct InjectingWitness {
  NodeId node;
  ArcId arc1;
  ArcId arc2;
};
struct InjectingResult {
  bool ok = false;
  std::optional<InjectingWitness> witness;
};
InjectingResult is_injecting(const GraphMorphism& f);

struct CoveringResult {
  bool ok = false;
  std::optional<SurjectingWitness> surjecting_witness;
  std::optional<InjectingWitness> injecting_witness;
};
CoveringResult is_covering(const GraphMorphism& f);

// One grafted tree of a whisker certificate, in the codomain's numbering:
// extra nodes listed parent before child, with the unique in-arc and the
// parent of each. `attach` is the image node the tree hangs from.
struct WhiskerTree {
  NodeId attach;
  std::vector<NodeId> nodes;
  std::vector<ArcId> in_arcs;
  std::vector<NodeId> parents;
};
struct WhiskerCertificate {
  std::vector<NodeId> image_nodes;
  std::vector<ArcId> image_arcs;
  std::vector<WhiskerTree> trees;
};
struct WhiskeringResult {
  bool ok = false;
  std::string reason;  // set when !ok
  std::optional<WhiskerCertificate> certificate;
};
WhiskeringResult is_whiskering(const GraphMorphism& f);

struct RootedTreeResult {
  bool ok = false;
  NodeId root = -1;
  std::string reason;
};
RootedTreeResult is_rooted_tree(const Graph& g);

struct RootedForestResult {
  bool ok = false;
  std::vector<NodeId> roots;
  std::string reason;
};
RootedForestResult is_rooted_forest(const Graph& g);

// Witness of non-bijectivity of the induced map on based cycles of one
// length: either two dom cycles with the same image, or an unhit cod cycle.
struct CycleMapWitness {
  int length = 0;
  bool unhit = false;
  BasedCycle first;   // dom cycle; for unhit witnesses, the cod cycle
  BasedCycle second;  // second colliding dom cycle (empty when unhit)
};
struct AcyclicBoundedResult {
  bool ok = false;
  int bound = 0;
  std::optional<CycleMapWitness> witness;
};

// Verifies bijectivity of the induced cycle maps for every length <= bound
// by explicit enumeration. Exponential in dense graphs; callers bound it.
AcyclicBoundedResult is_acyclic_bounded(const GraphMorphism& f, int bound);

// Off-diagonal element of the core of the fiber product of f with itself:
// an aligned pair of distinct equal-image nodes or arcs of dom sitting on
// a closed walk of the fiber product.
struct FiberCoreWitness {
  bool is_arc = false;
  int first = -1;   // node or arc id in dom
  int second = -1;
};

// Exact acyclicity decision: f is acyclic iff (i) the core of the fiber
// product of f with itself has no off-diagonal node or arc (injectivity of
// every induced cycle map) and (ii) dom and cod are almost isospectral
// (equality of all cycle counts). The diagnosis names the failing part.
struct AcyclicResult {
  bool ok = false;
  bool cycle_injective = false;
  bool counts_equal = false;
  std::optional<FiberCoreWitness> witness;  // set when !cycle_injective
  IntPolynomial dom_reversed;               // set when !counts_equal
  IntPolynomial cod_reversed;
};
AcyclicResult is_acyclic(const GraphMorphism& f);

struct AcyclicFibrationResult {
  bool ok = false;
  AcyclicResult acyclic;
  SurjectingResult surjecting;
};
AcyclicFibrationResult is_acyclic_fibration(const GraphMorphism& f);

// Decided by running the fold/inject factorization and testing whether the
// injecting factor is an isomorphism. `steps` is the number of elementary
// folds performed.
struct FoldingResult {
  bool ok = false;
  int steps = 0;
};
FoldingResult is_folding(const GraphMorphism& f);

}  // namespace gph

#endif  // GPH_CLASSIFY_HPP
