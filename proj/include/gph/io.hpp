#ifndef GPH_IO_HPP
#define GPH_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gph/classify.hpp"
#include "gph/factor.hpp"
#include "gph/graph.hpp"
#include "gph/zeta.hpp"

// JSON file formats.
//
// Graph files:
//   {"nodes": ["n0", ...],
//    "arcs": [{"id": "a0", "src": "n0", "tgt": "n1"}, ...]}
// String ids are mapped to dense integers in file order; node and arc order
// is semantic.
//
// Morphism files:
//   {"dom": <path or inline graph>, "cod": <path or inline graph>,
//    "node_map": {"n0": "m3", ...}, "arc_map": {"a0": "b1", ...}}
// Relative paths are resolved against the directory of the morphism file.
//
// Big integers and rationals serialize as decimal strings; polynomials as
// ascending coefficient arrays; series as {"order": M, "coefficients": []}.

namespace gph {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const GraphMorphism& f);
GraphMorphism morphism_from_json(const nlohmann::json& j,
                                 const std::string& base_dir);

Graph load_graph(const std::string& path);
GraphMorphism load_morphism(const std::string& path);
nlohmann::json load_json(const std::string& path);

// FNV-1a digest of the structural content (labels excluded), as a hex
// string; used to pin graphs inside reports and certificates.
std::string digest(const Graph& g);

nlohmann::json poly_to_json(const IntPolynomial& p);
nlohmann::json series_to_json(const TruncatedSeries& s);
nlohmann::json census_to_json(const PrimeCensus& c);
nlohmann::json cycle_to_json(const BasedCycle& c);
BasedCycle cycle_from_json(const nlohmann::json& j);

nlohmann::json whisker_certificate_to_json(const WhiskerCertificate& c);

// Certificate files carry the step list plus the digest (and inline copy)
// of the graph they are supposed to rebuild.
nlohmann::json fold_certificate_to_json(const FoldCertificate& c,
                                        const Graph& mid);
nlohmann::json cofib_certificate_to_json(const CofibCertificate& c,
                                         const Graph& mid);
struct ParsedCertificate {
  bool is_cofib = false;
  FoldCertificate fold;
  CofibCertificate cofib;
  std::string mid_digest;
};
ParsedCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json defects_to_json(const std::vector<Defect>& defects);

}  // namespace gph

#endif  // GPH_IO_HPP
