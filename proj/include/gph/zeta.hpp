#ifndef GPH_ZETA_HPP
#define GPH_ZETA_HPP

#include <string>
#include <vector>

#include "gph/cycles.hpp"
#include "gph/exact.hpp"
#include "gph/graph.hpp"

// Exact zeta series, characteristic polynomials, and the prime-cycle
// census of a finite directed multigraph. Everything here is computed in
// arbitrary-precision integer/rational arithmetic; there are no floating
// point eigenvalues, the spectrum is only ever represented by polynomials.

namespace gph {

// Polynomial with arbitrary-precision integer coefficients, stored in
// ascending degree with no trailing zeros (the zero polynomial is empty).
struct IntPolynomial {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : Int(0);
  }
  void trim();
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Long division; requires the divisor's leading coefficient to be a unit.
struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
PolyDivision poly_divide(const IntPolynomial& num, const IntPolynomial& den);

// Truncated formal power series with exact rational coefficients
// c_0..c_order. Arithmetic is exact through the truncation order.
struct TruncatedSeries {
  int order = 0;
  std::vector<Rat> coeffs;  // size order + 1

  Rat coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : Rat(0);
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_constant(const Rat& c, int order);
TruncatedSeries series_from_poly(const IntPolynomial& p, int order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Requires a unit (nonzero) constant term.
TruncatedSeries series_inverse(const TruncatedSeries& a);
// Requires zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& a);
// Requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& a);

// Adjacency matrix with entry (j, i) = number of arcs from node i to node
// j, nodes in id order.
IntMatrix adjacency_matrix(const Graph& g);

// c_1..c_M with c_m = trace(A^m) = number of based cycles of length m.
std::vector<Int> cycle_counts(const Graph& g, int max_length);

// Characteristic polynomial det(xI - A), computed by the Berkowitz
// division-free vector recurrence; always monic of degree |nodes|.
IntPolynomial char_poly(const IntMatrix& a);
IntPolynomial char_poly(const Graph& g);

// u^n a(1/u): the coefficient reversal of char_poly, trimmed; constant
// term 1. Encodes the nonzero part of the spectrum.
IntPolynomial reversed_char_poly(const Graph& g);

// The zeta series exp(sum_m c_m u^m / m) through order M. Computed twice,
// once as the series inverse of the reversed characteristic polynomial and
// once from the cycle counts via exp; an InternalCheckError is thrown if
// the two disagree. All coefficients are integers.
TruncatedSeries zeta_series(const Graph& g, int order);

// Default truncation order 2|nodes| + 4, which pins the rational function
// behind the series at desk scale.
int default_zeta_order(const Graph& g);

// counts[k-1] = number of shift classes of prime cycles of length k.
struct PrimeCensus {
  int max_length = 0;
  std::vector<Int> counts;

  Int count(int k) const {
    return k >= 1 && k <= max_length ? counts[k - 1] : Int(0);
  }
};

// Census by Moebius inversion of c_m = sum_{k|m} k * census_k. Each entry
// is checked to be a non-negative integer (InternalCheckError otherwise).
PrimeCensus prime_census(const Graph& g, int max_length);

// Explicit prime representatives: for each length k <= max_length, the
// lexicographically least representative of every shift class of cycles
// that are not multiples of shorter ones. Counts are cross-checked against
// prime_census. Exponential in max_length; keep it small.
std::vector<std::vector<BasedCycle>> enumerate_primes(const Graph& g,
                                                      int max_length);

// Product over primes of (1 - u^k)^(-count_k), truncated at `order`.
// Throws std::invalid_argument when the census is shorter than `order`.
TruncatedSeries euler_product(const PrimeCensus& census, int order);

bool is_isospectral(const Graph& x, const Graph& y);
bool is_almost_isospectral(const Graph& x, const Graph& y);

// For a covering surjective on nodes, char_poly(cod) divides
// char_poly(dom) exactly. Returns the quotient and remainder of that
// division; throws PreconditionError when f is not such a covering.
struct CoveringDivides {
  bool divides = false;
  IntPolynomial quotient;
  IntPolynomial remainder;
};
CoveringDivides check_covering_divides(const GraphMorphism& f);

// For an acyclic morphism the zeta series of dom and cod agree; checks
// this coefficientwise through `order`. Throws PreconditionError when f is
// not acyclic.
bool check_acyclic_preserves_zeta(const GraphMorphism& f, int order);

}  // namespace gph

#endif  // GPH_ZETA_HPP
