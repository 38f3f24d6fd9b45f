#include "gph/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "gph/classify.hpp"
#include "gph/errors.hpp"

namespace gph {

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs[k];
    if (c == 0) continue;
    Int abs_c = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (abs_c != 1 || k == 0) out += abs_c.get_str();
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

PolyDivision poly_divide(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.coeffs.empty()) throw std::invalid_argument("poly_divide: zero divisor");
  const Int& lead = den.coeffs.back();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("poly_divide: divisor must have unit leading coefficient");
  PolyDivision result;
  result.remainder = num;
  int dn = den.degree();
  while (result.remainder.degree() >= dn) {
    int shift = result.remainder.degree() - dn;
    Int factor = result.remainder.coeffs.back() / lead;
    if (static_cast<int>(result.quotient.coeffs.size()) < shift + 1)
      result.quotient.coeffs.resize(shift + 1, Int(0));
    result.quotient.coeffs[shift] += factor;
    for (int i = 0; i <= dn; ++i)
      result.remainder.coeffs[shift + i] -= factor * den.coeffs[i];
    result.remainder.trim();
  }
  result.quotient.trim();
  return result;
}

TruncatedSeries series_constant(const Rat& c, int order) {
  TruncatedSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, Rat(0));
  if (order >= 0) s.coeffs[0] = c;
  return s;
}

TruncatedSeries series_from_poly(const IntPolynomial& p, int order) {
  TruncatedSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, Rat(0));
  for (int k = 0; k <= order && k < static_cast<int>(p.coeffs.size()); ++k)
    s.coeffs[k] = Rat(p.coeffs[k]);
  return s;
}

namespace {

void canonicalize(Rat& r) { r.canonicalize(); }

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order)
    throw std::invalid_argument("series_mul: order mismatch");
  TruncatedSeries r;
  r.order = a.order;
  r.coeffs.assign(r.order + 1, Rat(0));
  for (int i = 0; i <= r.order; ++i)
    for (int j = 0; i + j <= r.order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  for (Rat& c : r.coeffs) canonicalize(c);
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a.coeffs.empty() || a.coeffs[0] == 0)
    throw std::invalid_argument("series_inverse: constant term must be a unit");
  TruncatedSeries r;
  r.order = a.order;
  r.coeffs.assign(r.order + 1, Rat(0));
  r.coeffs[0] = Rat(1) / a.coeffs[0];
  for (int n = 1; n <= r.order; ++n) {
    Rat acc(0);
    for (int k = 1; k <= n; ++k) acc += a.coeff(k) * r.coeffs[n - k];
    r.coeffs[n] = -acc / a.coeffs[0];
    canonicalize(r.coeffs[n]);
  }
  return r;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a.coeffs.empty() && a.coeffs[0] != 0)
    throw std::invalid_argument("series_exp: constant term must vanish");
  TruncatedSeries r;
  r.order = a.order;
  r.coeffs.assign(r.order + 1, Rat(0));
  r.coeffs[0] = 1;
  // n r_n = sum_{k=1..n} k a_k r_{n-k}
  for (int n = 1; n <= r.order; ++n) {
    Rat acc(0);
    for (int k = 1; k <= n; ++k) acc += Rat(k) * a.coeff(k) * r.coeffs[n - k];
    r.coeffs[n] = acc / n;
    canonicalize(r.coeffs[n]);
  }
  return r;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a.coeffs.empty() || a.coeffs[0] != 1)
    throw std::invalid_argument("series_log: constant term must be 1");
  TruncatedSeries r;
  r.order = a.order;
  r.coeffs.assign(r.order + 1, Rat(0));
  // k r_k = k a_k - sum_{j=1..k-1} j r_j a_{k-j}
  for (int k = 1; k <= r.order; ++k) {
    Rat acc = Rat(k) * a.coeff(k);
    for (int j = 1; j < k; ++j) acc -= Rat(j) * r.coeffs[j] * a.coeff(k - j);
    r.coeffs[k] = acc / k;
    canonicalize(r.coeffs[k]);
  }
  return r;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.node_count();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (ArcId e = 0; e < g.arc_count(); ++e) a(g.tgt(e), g.src(e)) += 1;
  return a;
}

std::vector<Int> cycle_counts(const Graph& g, int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("cycle_counts: max_length must be >= 1");
  IntMatrix a = adjacency_matrix(g);
  std::vector<Int> counts;
  counts.reserve(max_length);
  IntMatrix power = a;
  for (int m = 1; m <= max_length; ++m) {
    counts.push_back(power.trace());
    if (m < max_length) power = (power * a).eval();
  }
  return counts;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  // Berkowitz vector recurrence: division-free, so everything stays in the
  // integers. coeffs_desc holds the coefficients of det(xI - A_r) for the
  // leading principal r x r submatrix, highest degree first.
  std::vector<Int> coeffs_desc{Int(1)};
  for (int r = 1; r <= n; ++r) {
    // First column of the (r+1) x r Toeplitz factor:
    // [1, -a_rr, -(R C), -(R M C), -(R M^2 C), ...]
    std::vector<Int> t(r + 1);
    t[0] = 1;
    t[1] = -a(r - 1, r - 1);
    if (r >= 2) {
      Eigen::Matrix<Int, Eigen::Dynamic, 1> v = a.col(r - 1).head(r - 1);
      auto row = a.row(r - 1).head(r - 1);
      auto sub = a.topLeftCorner(r - 1, r - 1);
      for (int k = 2; k <= r; ++k) {
        t[k] = -(row * v)(0, 0);
        if (k < r) v = (sub * v).eval();
      }
    }
    std::vector<Int> next(r + 1, Int(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < r && j <= i; ++j)
        if (i - j <= r) next[i] += t[i - j] * coeffs_desc[j];
    coeffs_desc = std::move(next);
  }
  IntPolynomial p;
  p.coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) p.coeffs[n - i] = coeffs_desc[i];
  p.trim();
  return p;
}

IntPolynomial char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

IntPolynomial reversed_char_poly(const Graph& g) {
  IntPolynomial a = char_poly(g);
  const int n = g.node_count();
  IntPolynomial r;
  r.coeffs.resize(n + 1, Int(0));
  for (int k = 0; k < static_cast<int>(a.coeffs.size()); ++k)
    r.coeffs[n - k] = a.coeffs[k];
  r.trim();
  return r;
}

int default_zeta_order(const Graph& g) { return 2 * g.node_count() + 4; }

TruncatedSeries zeta_series(const Graph& g, int order) {
  if (order < 0) throw std::invalid_argument("zeta_series: negative order");
  // Route one: series inverse of the reversed characteristic polynomial.
  TruncatedSeries inverse_route =
      series_inverse(series_from_poly(reversed_char_poly(g), order));
  // Route two: exp of the cycle-count generating series.
  TruncatedSeries log_zeta;
  log_zeta.order = order;
  log_zeta.coeffs.assign(order + 1, Rat(0));
  if (order >= 1) {
    std::vector<Int> counts = cycle_counts(g, order);
    for (int m = 1; m <= order; ++m) {
      log_zeta.coeffs[m] = Rat(counts[m - 1]) / m;
      canonicalize(log_zeta.coeffs[m]);
    }
  }
  TruncatedSeries exp_route = series_exp(log_zeta);
  if (!(inverse_route == exp_route))
    throw InternalCheckError(
        "zeta_series: determinant route and exponential route disagree");
  for (const Rat& c : exp_route.coeffs)
    if (c.get_den() != 1)
      throw InternalCheckError("zeta_series: non-integral coefficient");
  return exp_route;
}

namespace {

int moebius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

}  // namespace

PrimeCensus prime_census(const Graph& g, int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("prime_census: max_length must be >= 1");
  std::vector<Int> counts = cycle_counts(g, max_length);
  PrimeCensus census;
  census.max_length = max_length;
  census.counts.resize(max_length);
  for (int k = 1; k <= max_length; ++k) {
    Int acc(0);
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) acc += moebius(k / d) * counts[d - 1];
    if (acc % k != 0)
      throw InternalCheckError("prime_census: non-integral count at length " +
                               std::to_string(k));
    Int value = acc / k;
    if (value < 0)
      throw InternalCheckError("prime_census: negative count at length " +
                               std::to_string(k));
    census.counts[k - 1] = value;
  }
  return census;
}

std::vector<std::vector<BasedCycle>> enumerate_primes(const Graph& g,
                                                      int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("enumerate_primes: max_length must be >= 1");
  std::vector<std::vector<BasedCycle>> primes(max_length);
  for (int n = 1; n <= max_length; ++n) {
    std::vector<BasedCycle> reps;
    for (const BasedCycle& c : enumerate_cycles(g, n)) {
      if (is_cycle_multiple(c)) continue;
      if (least_rotation(c) == c) reps.push_back(c);
    }
    primes[n - 1] = std::move(reps);
  }
  PrimeCensus census = prime_census(g, max_length);
  for (int k = 1; k <= max_length; ++k)
    if (Int(static_cast<long>(primes[k - 1].size())) != census.counts[k - 1])
      throw InternalCheckError(
          "enumerate_primes: representative count disagrees with census at length " +
          std::to_string(k));
  return primes;
}

TruncatedSeries euler_product(const PrimeCensus& census, int order) {
  if (census.max_length < order)
    throw std::invalid_argument("euler_product: census too short for requested order");
  TruncatedSeries product = series_constant(Rat(1), order);
  for (int k = 1; k <= order; ++k) {
    const Int& count = census.counts[k - 1];
    if (count == 0) continue;
    // (1 - u^k)^(-c) has coefficient binom(c + j - 1, j) at u^(jk).
    TruncatedSeries factor = series_constant(Rat(1), order);
    for (int j = 1; j * k <= order; ++j) {
      Int binom(1);
      for (int i = 0; i < j; ++i) binom *= count + i;
      for (int i = 2; i <= j; ++i) binom /= i;
      factor.coeffs[j * k] = Rat(binom);
    }
    product = series_mul(product, factor);
  }
  return product;
}

bool is_isospectral(const Graph& x, const Graph& y) {
  return char_poly(x) == char_poly(y);
}

bool is_almost_isospectral(const Graph& x, const Graph& y) {
  return reversed_char_poly(x) == reversed_char_poly(y);
}

CoveringDivides check_covering_divides(const GraphMorphism& f) {
  CoveringResult covering = is_covering(f);
  if (!covering.ok)
    throw PreconditionError("check_covering_divides: morphism is not a covering");
  std::vector<char> node_hit(f.cod.node_count(), 0);
  for (NodeId image : f.node_map) node_hit[image] = 1;
  for (char hit : node_hit)
    if (!hit)
      throw PreconditionError(
          "check_covering_divides: covering is not surjective on nodes");
  CoveringDivides result;
  PolyDivision division = poly_divide(char_poly(f.dom), char_poly(f.cod));
  result.quotient = division.quotient;
  result.remainder = division.remainder;
  result.divides = division.remainder.coeffs.empty();
  return result;
}

bool check_acyclic_preserves_zeta(const GraphMorphism& f, int order) {
  if (!is_acyclic(f).ok)
    throw PreconditionError("check_acyclic_preserves_zeta: morphism is not acyclic");
  return zeta_series(f.dom, order) == zeta_series(f.cod, order);
}

}  // namespace gph
