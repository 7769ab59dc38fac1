#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/types.hpp"

namespace kgraph {

struct KatzParams {
  double alpha_scale = 0.85;  // alpha = alpha_scale / lambda_max, must be in (0,1)
  bool normalize = true;      // L2 unit norm
  double tol = 1e-10;         // L-inf difference between successive iterates
  std::size_t max_iters = 10000;
};

struct CentralityResult {
  std::vector<double> scores;
  double alpha_used = 0.0;
  double lambda_max = 0.0;
  std::size_t iterations = 0;
  bool normalized = false;
};

struct RankedRow {
  std::size_t rank;
  std::string id;
  EntityType etype;
  double score;
};

namespace detail {

// y = A x over the collapsed view, sequential and index-ordered so the
// result is bit-identical across runs.
inline void spmv(const KnowledgeGraph& g, const std::vector<double>& x,
                 std::vector<double>& y) {
  std::size_t n = g.node_count();
  y.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j : g.neighbors(i)) acc += x[j];
    y[i] = acc;
  }
}

inline double linf_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace detail

// Largest eigenvalue of the collapsed symmetric adjacency, by power
// iteration from the all-ones vector with a Rayleigh-quotient estimate.
// Iterates on A + I: lambda_max >= |lambda_min| for a nonnegative
// symmetric matrix, so the shift makes lambda_max + 1 strictly dominant
// even on bipartite graphs where +-lambda_max would otherwise tie.
// An edgeless graph has A = 0 and returns 0.
inline double spectral_radius(const KnowledgeGraph& g, double tol = 1e-8,
                              std::size_t max_iters = 10000) {
  std::size_t n = g.node_count();
  if (n == 0 || g.edge_count() == 0) return 0.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    detail::spmv(g, x, y);
    double rayleigh = 0.0;  // x'Ax with x unit-norm
    for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * y[i];
    double residual = 0.0;  // ||Ax - rho x||, bounds the eigenvalue error
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] - rayleigh * x[i];
      residual += r * r;
    }
    if (std::sqrt(residual) <= tol) return rayleigh;
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];  // (A + I) x
    double norm = detail::l2_norm(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw NoConvergence("spectral radius estimate did not stabilize within " +
                      std::to_string(max_iters) + " iterations");
}

// Fixed point of x <- alpha * A (x + 1), which sums the damped walk series
// started from every node. A is symmetric so row and column sums coincide.
inline CentralityResult katz_centrality(const KnowledgeGraph& g,
                                        const KatzParams& params = {}) {
  if (params.alpha_scale <= 0.0 || params.alpha_scale >= 1.0)
    throw GraphError("alpha_scale must be in (0,1)");
  std::size_t n = g.node_count();

  CentralityResult result;
  result.lambda_max = spectral_radius(g);
  result.alpha_used = result.lambda_max > 0.0
                          ? params.alpha_scale / result.lambda_max
                          : params.alpha_scale;
  result.normalized = params.normalize;
  result.scores.assign(n, 0.0);
  if (n == 0 || g.edge_count() == 0) return result;

  const double alpha = result.alpha_used;
  std::vector<double> x(n, 0.0), shifted(n), next;
  std::size_t iter = 0;
  for (; iter < params.max_iters; ++iter) {
    for (std::size_t i = 0; i < n; ++i) shifted[i] = x[i] + 1.0;
    detail::spmv(g, shifted, next);
    for (double& v : next) v *= alpha;
    double diff = detail::linf_diff(next, x);
    x.swap(next);
    if (diff <= params.tol) break;
  }
  if (iter == params.max_iters)
    throw NoConvergence("katz iteration did not converge");
  result.iterations = iter + 1;

  if (params.normalize) {
    double norm = detail::l2_norm(x);
    if (norm > 0.0)
      for (double& v : x) v /= norm;
  }
  result.scores = std::move(x);
  return result;
}

// Descending by score, ties broken by ascending id. With a type filter,
// only nodes of that type are kept and ranks restart at 1 within it.
inline std::vector<RankedRow> rank(const CentralityResult& result,
                                   const KnowledgeGraph& g, std::size_t top_k,
                                   std::optional<EntityType> filter = std::nullopt) {
  std::vector<std::size_t> order;
  order.reserve(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (!filter || g.type_of(i) == *filter) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (result.scores[a] != result.scores[b])
      return result.scores[a] > result.scores[b];
    return g.id_of(a) < g.id_of(b);
  });
  if (order.size() > top_k) order.resize(top_k);

  std::vector<RankedRow> rows;
  rows.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    rows.push_back({r + 1, g.id_of(order[r]), g.type_of(order[r]),
                    result.scores[order[r]]});
  return rows;
}

}  // namespace kgraph
