#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/types.hpp"

namespace kgraph {

struct Subnetwork {
  std::optional<std::string> center;
  std::set<std::string> node_ids;
  std::set<std::pair<std::string, std::string>> edges;  // unordered pairs, first < second
  std::map<EntityType, std::size_t> type_counts;

  std::size_t node_count() const { return node_ids.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct PathConstraint {
  std::size_t max_hops = 3;                         // edges per path
  std::set<EntityType> allowed_intermediate_types;  // empty = unconstrained
};

struct TreatmentHit {
  std::string drug;
  std::string disease;
  std::set<std::string> evidence;
  bool stored_drug_to_disease;  // orientation of (one of) the stored relations
};

struct TreatmentResult {
  std::vector<TreatmentHit> hits;
  std::vector<std::string> unknown_diseases;
};

namespace detail {

inline Subnetwork induced(const KnowledgeGraph& g,
                          const std::set<std::size_t>& indices) {
  Subnetwork sub;
  for (EntityType t : kAllEntityTypes) sub.type_counts[t] = 0;
  for (std::size_t i : indices) {
    sub.node_ids.insert(g.id_of(i));
    ++sub.type_counts[g.type_of(i)];
  }
  for (std::size_t i : indices)
    for (std::size_t j : g.neighbors(i))
      if (i < j && indices.contains(j))
        sub.edges.insert({std::min(g.id_of(i), g.id_of(j)),
                          std::max(g.id_of(i), g.id_of(j))});
  return sub;
}

}  // namespace detail

// Induced subgraph on the center plus all of its collapsed-view neighbors,
// including the neighbor-neighbor edges.
inline Subnetwork ego_subnetwork(const KnowledgeGraph& g, const std::string& center) {
  std::size_t c = g.index_of(center);
  std::set<std::size_t> indices{c};
  for (std::size_t j : g.neighbors(c)) indices.insert(j);
  Subnetwork sub = detail::induced(g, indices);
  sub.center = center;
  return sub;
}

// Induced subgraph on an explicit node set; every id must exist.
inline Subnetwork induced_subgraph(const KnowledgeGraph& g,
                                   const std::set<std::string>& node_ids) {
  std::vector<std::string> missing;
  for (const auto& id : node_ids)
    if (!g.has_entity(id)) missing.push_back(id);
  if (!missing.empty()) {
    std::string msg = "unknown entities:";
    for (const auto& id : missing) msg += " '" + id + "'";
    throw UnknownEntity(msg);
  }
  std::set<std::size_t> indices;
  for (const auto& id : node_ids) indices.insert(g.index_of(id));
  return detail::induced(g, indices);
}

// All simple paths between two nodes over the collapsed view, at most
// max_hops edges long. The type constraint applies to intermediate nodes
// only; endpoints are exempt. Output sorted by (length, node sequence).
inline std::vector<std::vector<std::string>> paths_between(
    const KnowledgeGraph& g, const std::string& from, const std::string& to,
    const PathConstraint& constraint = {}) {
  if (from == to) throw SameEndpoints("path endpoints must differ");
  std::size_t src = g.index_of(from);
  std::size_t dst = g.index_of(to);
  if (constraint.max_hops < 1)
    throw GraphError("max_hops must be at least 1");

  std::vector<std::vector<std::string>> paths;
  std::vector<std::size_t> stack{src};
  std::vector<bool> on_path(g.node_count(), false);
  on_path[src] = true;

  auto intermediate_allowed = [&](std::size_t v) {
    return constraint.allowed_intermediate_types.empty() ||
           constraint.allowed_intermediate_types.contains(g.type_of(v));
  };

  auto dfs = [&](auto&& self, std::size_t u) -> void {
    for (std::size_t v : g.neighbors(u)) {
      if (on_path[v]) continue;
      if (v == dst) {
        std::vector<std::string> path;
        path.reserve(stack.size() + 1);
        for (std::size_t w : stack) path.push_back(g.id_of(w));
        path.push_back(g.id_of(dst));
        paths.push_back(std::move(path));
        continue;
      }
      if (stack.size() >= constraint.max_hops) continue;  // no room for v plus dst
      if (!intermediate_allowed(v)) continue;
      stack.push_back(v);
      on_path[v] = true;
      self(self, v);
      on_path[v] = false;
      stack.pop_back();
    }
  };
  dfs(dfs, src);

  std::sort(paths.begin(), paths.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return paths;
}

// Stored relations of the given type with one endpoint in the disease set
// and a Drug on the other end, regardless of orientation. Hits are
// deduplicated by (drug, disease) with evidence unioned.
inline TreatmentResult treatments_for(const KnowledgeGraph& g,
                                      const std::set<std::string>& disease_ids,
                                      const std::string& rtype = "TREATS") {
  TreatmentResult result;
  std::set<std::string> known;
  for (const auto& id : disease_ids) {
    if (g.has_entity(id))
      known.insert(id);
    else
      result.unknown_diseases.push_back(id);
  }

  std::map<std::pair<std::string, std::string>, TreatmentHit> by_pair;
  g.for_each_relation([&](const Relation& r) {
    if (r.rtype != rtype) return;
    std::string drug, disease;
    bool drug_to_disease;
    if (known.contains(r.dst) && g.entity(r.src).etype == EntityType::Drug) {
      drug = r.src; disease = r.dst; drug_to_disease = true;
    } else if (known.contains(r.src) && g.entity(r.dst).etype == EntityType::Drug) {
      drug = r.dst; disease = r.src; drug_to_disease = false;
    } else {
      return;
    }
    auto [it, inserted] = by_pair.try_emplace(
        {drug, disease}, TreatmentHit{drug, disease, r.evidence, drug_to_disease});
    if (!inserted)
      it->second.evidence.insert(r.evidence.begin(), r.evidence.end());
  });

  for (auto& [key, hit] : by_pair) result.hits.push_back(std::move(hit));
  return result;  // map order is already (drug, disease)
}

}  // namespace kgraph
