#include <doctest.h>

#include <random>

#include "kgraph/graph.hpp"
#include "oracle.hpp"

using namespace kgraph;

namespace {

KnowledgeGraph star(std::size_t leaves) {
  KnowledgeGraph g;
  g.add_entity({"center", "center", EntityType::Protein});
  for (std::size_t i = 0; i < leaves; ++i) {
    std::string id = "leaf" + std::to_string(i);
    g.add_entity({id, id, EntityType::Drug});
    g.add_relation({"center", id, "REL", {}});
  }
  g.freeze();
  return g;
}

}  // namespace

TEST_CASE("add_entity stores, dedupes, and rejects conflicts") {
  KnowledgeGraph g;
  g.add_entity({"ace2", "ace2", EntityType::Protein});
  CHECK(g.node_count() == 1);

  g.add_entity({"ace2", "ace2", EntityType::Protein});  // identical: no-op
  CHECK(g.node_count() == 1);

  CHECK_THROWS_AS(g.add_entity({"ace2", "ACE2 receptor", EntityType::Drug}),
                  DuplicateConflict);
}

TEST_CASE("add_relation validates endpoints and merges evidence") {
  KnowledgeGraph g;
  g.add_entity({"chloroquine", "Chloroquine", EntityType::Drug});
  g.add_entity({"covid-19", "COVID-19", EntityType::Disease});
  g.add_entity({"ace2", "ACE2", EntityType::Protein});

  g.add_relation({"chloroquine", "covid-19", "TREATS", {"doc1"}});
  g.add_relation({"chloroquine", "covid-19", "TREATS", {"doc2"}});
  CHECK(g.relation_count() == 1);
  CHECK(g.relations()[0].evidence == std::set<std::string>{"doc1", "doc2"});

  CHECK_THROWS_AS(g.add_relation({"ace2", "ace2", "BINDS", {}}), SelfLoop);
  CHECK_THROWS_AS(g.add_relation({"ace2", "ghost", "BINDS", {}}), UnknownEntity);
}

TEST_CASE("frozen graph refuses mutation; analytics need freeze") {
  KnowledgeGraph g;
  g.add_entity({"a", "a", EntityType::Protein});
  CHECK_THROWS_AS(g.edge_count(), NotFrozen);
  g.freeze();
  CHECK_THROWS_AS(g.add_entity({"b", "b", EntityType::Drug}), FrozenGraph);
  CHECK_THROWS_AS(g.freeze(), FrozenGraph);
}

TEST_CASE("freeze collapses multi-edges and symmetrizes") {
  KnowledgeGraph g;
  g.add_entity({"a", "a", EntityType::Protein});
  g.add_entity({"b", "b", EntityType::Drug});
  g.add_relation({"a", "b", "TREATS", {}});
  g.add_relation({"b", "a", "INHIBITS", {}});
  g.freeze();
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(g.index_of("a")).size() == 1);
  CHECK(g.neighbors(g.index_of("b")).size() == 1);
}

TEST_CASE("empty graph freezes to n = 0") {
  KnowledgeGraph g;
  g.freeze();
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
  CHECK(g.type_counts()[EntityType::Protein] == 0);
}

TEST_CASE("type_counts sums to n") {
  KnowledgeGraph g;
  g.add_entity({"p", "p", EntityType::Protein});
  g.add_entity({"d", "d", EntityType::Drug});
  g.freeze();
  auto counts = g.type_counts();
  CHECK(counts[EntityType::Protein] == 1);
  CHECK(counts[EntityType::Drug] == 1);
  CHECK(counts[EntityType::Disease] == 0);
  CHECK(counts[EntityType::Taxonomy] == 0);
}

TEST_CASE("degree is distinct-neighbor count in the collapsed view") {
  auto g = star(4);
  CHECK(g.degree("center") == 4);
  CHECK(g.degree("leaf0") == 1);

  KnowledgeGraph h;
  h.add_entity({"a", "a", EntityType::Protein});
  h.add_entity({"b", "b", EntityType::Drug});
  h.add_entity({"iso", "iso", EntityType::Disease});
  h.add_relation({"a", "b", "TREATS", {}});
  h.add_relation({"a", "b", "BINDS", {}});
  h.add_relation({"b", "a", "INHIBITS", {}});
  h.freeze();
  CHECK(h.degree("a") == 1);  // 3 parallel typed relations collapse to 1 neighbor
  CHECK(h.degree("iso") == 0);
  CHECK_THROWS_AS(h.degree("ghost"), UnknownEntity);
}

TEST_CASE("collapsed adjacency is symmetric with zero diagonal on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 20, 0.2);
    auto a = oracle::dense_adjacency(g);
    CHECK(a.isApprox(a.transpose()));
    CHECK(a.diagonal().isZero());
    // collapse soundness: every stored relation appears as an edge
    g.for_each_relation([&](const Relation& r) {
      CHECK(a(static_cast<Eigen::Index>(g.index_of(r.src)),
              static_cast<Eigen::Index>(g.index_of(r.dst))) == 1.0);
    });
  }
}
