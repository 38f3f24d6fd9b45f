#ifndef GPH_FACTOR_HPP
#define GPH_FACTOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gph/classify.hpp"
#include "gph/cycles.hpp"
#include "gph/graph.hpp"

// Constructive factorizations: whisker/surject, fold/inject, and the
// cofibration / acyclic-fibration factorization of the model structure,
// together with filler construction and a brute-force lifting oracle.
//
// The constructions that are infinite on paper (trees of paths reaching a
// cycle, missing cycles of unbounded length) are truncated at caller-given
// bounds; truncation is reported through machine-checkable Defect records,
// never silently.

namespace gph {

struct Defect {
  enum class Kind { truncated_whisker, unresolved_surjectivity, bound_exhausted };
  Kind kind;
  std::string location;
  int bound = 0;
};

std::string to_string(Defect::Kind k);

// One elementary fold: the two distinct arcs out of `node` that were
// identified (together with their targets). Ids refer to the graph the
// step was applied to.
struct FoldStep {
  NodeId node;
  ArcId arc1;
  ArcId arc2;
};
struct FoldCertificate {
  std::vector<FoldStep> steps;
};

// Generator steps of a cofibration certificate. Replaying the steps from
// dom reproduces mid exactly:
//  - whisker: append a fresh node and a fresh arc attach -> fresh;
//  - add_cycle: append a disjoint cycle of the given length (its image in
//    cod is recorded in `target` for auditing);
//  - merge_cycles: identify `first` and `second` pointwise and renumber by
//    smallest representative.
struct CofibStep {
  enum class Kind { whisker, add_cycle, merge_cycles };
  Kind kind;
  NodeId attach = -1;   // whisker
  int length = 0;       // add_cycle
  BasedCycle target;    // add_cycle: the cod cycle being hit
  BasedCycle first;     // merge_cycles
  BasedCycle second;    // merge_cycles
};
struct CofibCertificate {
  std::vector<CofibStep> steps;
};

std::string to_string(CofibStep::Kind k);

struct RightClassReport {
  std::optional<SurjectingResult> surjecting;
  std::optional<InjectingResult> injecting;
  std::optional<AcyclicResult> acyclic;
  std::optional<bool> acyclic_fibration;
};

// right o left == the factored morphism, exactly, on every node and arc.
struct FactorizationResult {
  GraphMorphism left;
  Graph mid;
  GraphMorphism right;
  std::optional<WhiskerCertificate> whisker_certificate;
  std::optional<FoldCertificate> fold_certificate;
  std::optional<CofibCertificate> cofib_certificate;
  RightClassReport right_report;
  std::vector<Defect> defects;
};

// Factors f as a whiskering followed by a surjecting by grafting, for each
// dom node x, the tree of paths of cod leaving f(x). Trees that would be
// infinite (a cycle of cod is reachable from f(x)) are cut at depth
// `depth` and each deficient frontier node is reported as a
// truncated_whisker defect; trees into cycle-free territory are built in
// full, so for such codomains the right factor is exactly surjecting.
FactorizationResult factor_whisker_surject(const GraphMorphism& f, int depth);

// A commuting lifting square:
//
//        top
//    X -------> A
//    |          |
//  left       right
//    |          |
//    v          v
//    Y -------> B
//       bottom
//
struct LiftSquare {
  GraphMorphism left;
  GraphMorphism right;
  GraphMorphism top;
  GraphMorphism bottom;
};

// Validates endpoints and commutativity; throws std::invalid_argument.
LiftSquare make_lift_square(GraphMorphism left, GraphMorphism right,
                            GraphMorphism top, GraphMorphism bottom);

// Diagonal filler for a square whose left leg is a whiskering with finite
// forest and whose right leg is surjecting. Built by induction on tree
// depth, choosing the least arc preimage at every step; both triangle
// identities are verified before returning. Throws PreconditionError when
// the legs are not of the stated classes.
GraphMorphism filler_against_surjecting(const LiftSquare& square);

// The elementary folding at a witness (node, a', a''): identifies the two
// arcs and their targets, renumbering by smallest representative. Returns
// the projection x -> folded. Throws std::invalid_argument on an invalid
// witness.
GraphMorphism elementary_fold(const Graph& x, const FoldStep& witness);

// Factors f as a folding followed by an injecting by repeatedly folding
// the least witness pair. The number of steps equals the drop in arc
// count, and replaying the certificate from dom reproduces mid.
FactorizationResult factor_fold_inject(const GraphMorphism& f);

// Searches the core of the fiber product of f with itself for an
// off-diagonal element and, if one exists, returns the shortest aligned
// pair of distinct equal-image based cycles through it (length at most
// |dom nodes|^2).
std::optional<std::pair<BasedCycle, BasedCycle>> find_injectivity_violation(
    const GraphMorphism& f);

// Identifies two equal-length based cycles of z pointwise (the pushout of
// the two-cycles-onto-one generator along them). Returns the projection.
// Throws std::invalid_argument on length mismatch or invalid cycles.
GraphMorphism merge_cycle_pair(const Graph& z, const BasedCycle& c1,
                               const BasedCycle& c2);

// Model-structure factorization: cofibration then acyclic fibration.
// Step 1 adjoins a fresh cycle summand for every unhit cod cycle of length
// <= merge_bound, step 2 merges equal-image cycle pairs guided by the
// fiber product until none remain, step 3 whiskers at `depth`. The right
// factor is classified and any residual failure is reported as defects
// (bound_exhausted with the first failing cycle length, or
// truncated_whisker); with a cycle-free codomain the result is exact.
FactorizationResult factor_cofib_acyclicfib(const GraphMorphism& g, int depth,
                                            int merge_bound);

enum class FillerStatus { found, none, budget_exhausted };

struct FillerSearch {
  FillerStatus status = FillerStatus::none;
  std::optional<GraphMorphism> filler;  // first filler in lexicographic order
  long long fillers_found = 0;
  long long steps_used = 0;
};

// Exhaustive backtracking search for fillers of an arbitrary commuting
// square. `budget` bounds the number of candidate assignments tried; when
// it runs out the status is budget_exhausted (distinct from a definite
// none). With count_all the search continues past the first filler and
// reports the total, which tests orthogonality (unique fillers).
FillerSearch brute_force_filler(const LiftSquare& square, long long budget,
                                bool count_all = false);

// Certificate replay. Both throw InvariantViolation on a malformed step.
Graph replay_fold_certificate(const Graph& start, const FoldCertificate& cert);
Graph replay_cofib_certificate(const Graph& start, const CofibCertificate& cert);

}  // namespace gph

#endif  // GPH_FACTOR_HPP
