// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here works on dense matrices or explicit enumeration and never
// calls into the iterative/sparse implementation paths it checks.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/query.hpp"
#include "kgraph/types.hpp"

namespace oracle {

inline Eigen::MatrixXd dense_adjacency(const kgraph::KnowledgeGraph& g) {
  std::size_t n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

inline double dense_spectral_radius(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Truncated damped walk series sum_{k=1..terms} alpha^k (A^T)^k 1 by
// explicit dense matrix powers.
inline std::vector<double> truncated_katz_series(const Eigen::MatrixXd& a,
                                                 double alpha,
                                                 int terms = 60) {
  Eigen::Index n = a.rows();
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double damp = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power = a.transpose() * power;
    damp *= alpha;
    total += damp * (power * ones);
  }
  return {total.data(), total.data() + n};
}

// Exhaustive simple-path enumeration by recursion over all neighbor
// choices, no hop-aware pruning beyond the bound itself.
inline std::vector<std::vector<std::string>> brute_force_paths(
    const kgraph::KnowledgeGraph& g, const std::string& from,
    const std::string& to, const kgraph::PathConstraint& c) {
  std::size_t src = g.index_of(from), dst = g.index_of(to);
  std::vector<std::vector<std::string>> found;
  std::vector<std::size_t> current{src};

  auto allowed = [&](std::size_t v) {
    return c.allowed_intermediate_types.empty() ||
           c.allowed_intermediate_types.contains(g.type_of(v));
  };
  auto extend = [&](auto&& self) -> void {
    if (current.size() - 1 > c.max_hops) return;
    if (current.back() == dst) {
      std::vector<std::string> ids;
      for (std::size_t w : current) ids.push_back(g.id_of(w));
      found.push_back(std::move(ids));
      return;
    }
    for (std::size_t v : g.neighbors(current.back())) {
      if (std::find(current.begin(), current.end(), v) != current.end()) continue;
      if (v != dst && !allowed(v)) continue;
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

// Induced subgraph on {center} + N(center), built from the edge list alone.
inline kgraph::Subnetwork brute_force_ego(const kgraph::KnowledgeGraph& g,
                                          const std::string& center) {
  std::size_t c = g.index_of(center);
  std::set<std::size_t> members{c};
  for (auto [u, v] : g.edges()) {
    if (u == c) members.insert(v);
    if (v == c) members.insert(u);
  }
  kgraph::Subnetwork sub;
  sub.center = center;
  for (kgraph::EntityType t : kgraph::kAllEntityTypes) sub.type_counts[t] = 0;
  for (std::size_t i : members) {
    sub.node_ids.insert(g.id_of(i));
    ++sub.type_counts[g.type_of(i)];
  }
  for (auto [u, v] : g.edges())
    if (members.contains(u) && members.contains(v))
      sub.edges.insert({std::min(g.id_of(u), g.id_of(v)),
                        std::max(g.id_of(u), g.id_of(v))});
  return sub;
}

// Random typed graph: node ids n000.., each unordered pair linked with
// probability edge_prob via a directed REL relation of random orientation.
inline kgraph::KnowledgeGraph random_graph(std::mt19937& rng, std::size_t n,
                                           double edge_prob) {
  kgraph::KnowledgeGraph g;
  std::uniform_int_distribution<int> type_pick(0, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "n%03zu", i);
    ids.emplace_back(buf);
    g.add_entity({ids.back(), ids.back(),
                  kgraph::kAllEntityTypes[static_cast<std::size_t>(type_pick(rng))]});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) {
        if (coin(rng) < 0.5)
          g.add_relation({ids[i], ids[j], "REL", {}});
        else
          g.add_relation({ids[j], ids[i], "REL", {}});
      }
  g.freeze();
  return g;
}

}  // namespace oracle
