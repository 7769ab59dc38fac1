#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "kgraph/types.hpp"

namespace kgraph {

// Typed multigraph of entities and directed relations. Mutable until
// freeze(); afterwards immutable, with a collapsed undirected simple
// adjacency view (CSR neighbor lists) that all analytics run on.
class KnowledgeGraph {
 public:
  void add_entity(const Entity& e) {
    require_unfrozen();
    if (!valid_entity_id(e.id))
      throw GraphError("invalid entity id: '" + e.id + "'");
    auto [it, inserted] = entities_.try_emplace(e.id, e);
    if (!inserted && it->second != e)
      throw DuplicateConflict("entity '" + e.id +
                              "' redefined with different name or type");
  }

  void add_relation(const Relation& r) {
    require_unfrozen();
    if (r.src == r.dst) throw SelfLoop("self-relation on '" + r.src + "'");
    if (!entities_.contains(r.src)) throw UnknownEntity("unknown entity '" + r.src + "'");
    if (!entities_.contains(r.dst)) throw UnknownEntity("unknown entity '" + r.dst + "'");
    if (!valid_rtype(r.rtype)) throw GraphError("invalid relation type '" + r.rtype + "'");
    auto& stored = relations_[{r.src, r.dst, r.rtype}];
    stored.insert(r.evidence.begin(), r.evidence.end());
  }

  // Builds the id<->index bijection (lexicographic by id) and the
  // symmetric 0/1 adjacency. No further mutation afterwards.
  void freeze() {
    require_unfrozen();
    ids_.reserve(entities_.size());
    for (const auto& [id, e] : entities_) ids_.push_back(id);
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = i;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, ev] : relations_) {
      std::size_t u = index_.at(std::get<0>(key));
      std::size_t v = index_.at(std::get<1>(key));
      pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    edge_pairs_ = std::move(pairs);

    std::vector<std::size_t> deg(ids_.size(), 0);
    for (auto [u, v] : edge_pairs_) { ++deg[u]; ++deg[v]; }
    adj_offsets_.assign(ids_.size() + 1, 0);
    for (std::size_t i = 0; i < ids_.size(); ++i)
      adj_offsets_[i + 1] = adj_offsets_[i] + deg[i];
    adj_.resize(2 * edge_pairs_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (auto [u, v] : edge_pairs_) {
      adj_[cursor[u]++] = v;
      adj_[cursor[v]++] = u;
    }
    // pairs were sorted, so each neighbor list comes out sorted for u;
    // sort explicitly to cover the v side as well
    for (std::size_t i = 0; i < ids_.size(); ++i)
      std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[i]),
                adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[i + 1]));
    frozen_ = true;
  }

  bool frozen() const { return frozen_; }
  std::size_t node_count() const { return entities_.size(); }
  std::size_t edge_count() const { require_frozen(); return edge_pairs_.size(); }
  std::size_t relation_count() const { return relations_.size(); }

  bool has_entity(const std::string& id) const { return entities_.contains(id); }

  const Entity& entity(const std::string& id) const {
    auto it = entities_.find(id);
    if (it == entities_.end()) throw UnknownEntity("unknown entity '" + id + "'");
    return it->second;
  }

  std::size_t index_of(const std::string& id) const {
    require_frozen();
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownEntity("unknown entity '" + id + "'");
    return it->second;
  }

  const std::string& id_of(std::size_t index) const {
    require_frozen();
    return ids_[index];
  }

  EntityType type_of(std::size_t index) const {
    require_frozen();
    return entities_.at(ids_[index]).etype;
  }

  std::span<const std::size_t> neighbors(std::size_t index) const {
    require_frozen();
    return {adj_.data() + adj_offsets_[index],
            adj_offsets_[index + 1] - adj_offsets_[index]};
  }

  std::size_t degree(const std::string& id) const {
    return neighbors(index_of(id)).size();
  }

  std::map<EntityType, std::size_t> type_counts() const {
    require_frozen();
    std::map<EntityType, std::size_t> counts;
    for (EntityType t : kAllEntityTypes) counts[t] = 0;
    for (const auto& [id, e] : entities_) ++counts[e.etype];
    return counts;
  }

  // Collapsed edges as sorted (u, v) index pairs with u < v.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    require_frozen();
    return edge_pairs_;
  }

  // Stored relations in deterministic (src, dst, rtype) order.
  template <typename Fn>
  void for_each_relation(Fn&& fn) const {
    for (const auto& [key, evidence] : relations_)
      fn(Relation{std::get<0>(key), std::get<1>(key), std::get<2>(key), evidence});
  }

  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    out.reserve(relations_.size());
    for_each_relation([&](const Relation& r) { out.push_back(r); });
    return out;
  }

  // Relation types linking an unordered entity pair, either direction.
  std::vector<std::string> rtypes_between(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& [key, ev] : relations_) {
      const auto& [src, dst, rtype] = key;
      if ((src == a && dst == b) || (src == b && dst == a))
        out.push_back(rtype);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void require_unfrozen() const {
    if (frozen_) throw FrozenGraph("graph is frozen");
  }
  void require_frozen() const {
    if (!frozen_) throw NotFrozen("graph is not frozen");
  }

  std::map<std::string, Entity> entities_;
  std::map<std::tuple<std::string, std::string, std::string>,
           std::set<std::string>> relations_;
  bool frozen_ = false;

  // built by freeze()
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs_;
  std::vector<std::size_t> adj_offsets_;
  std::vector<std::size_t> adj_;
};

}  // namespace kgraph
