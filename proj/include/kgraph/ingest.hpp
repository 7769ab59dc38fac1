#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/types.hpp"

namespace kgraph {

struct IngestReport {
  std::size_t entities_loaded = 0;
  std::size_t relations_loaded = 0;
  std::size_t duplicates_merged = 0;
  std::size_t rows_rejected = 0;
  std::vector<std::pair<std::size_t, std::string>> rejection_log;  // 1-based line, reason

  void reject(std::size_t line, std::string reason) {
    ++rows_rejected;
    rejection_log.emplace_back(line, std::move(reason));
  }

  void merge(const IngestReport& other) {
    entities_loaded += other.entities_loaded;
    relations_loaded += other.relations_loaded;
    duplicates_merged += other.duplicates_merged;
    rows_rejected += other.rows_rejected;
    rejection_log.insert(rejection_log.end(), other.rejection_log.begin(),
                         other.rejection_log.end());
  }
};

struct FatalIngestError : GraphError { using GraphError::GraphError; };

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Parsed row plus the 1-based source line it came from, so load_graph can
// log graph-level rejections against the right line.
struct EntityRow {
  std::size_t line;
  Entity entity;
};

struct RelationRow {
  std::size_t line;
  Relation relation;
};

inline std::pair<std::vector<EntityRow>, IngestReport> parse_entity_rows(
    std::istream& in) {
  std::vector<EntityRow> out;
  IngestReport report;
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "id\tname\ttype")
    throw FatalIngestError("entities file: expected header 'id\\tname\\ttype'");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      report.reject(lineno, "expected 3 columns, got " + std::to_string(cols.size()));
      continue;
    }
    if (!valid_entity_id(cols[0])) {
      report.reject(lineno, "empty or invalid entity id");
      continue;
    }
    auto etype = parse_entity_type(cols[2]);
    if (!etype) {
      report.reject(lineno, "unknown entity type '" + cols[2] + "'");
      continue;
    }
    out.push_back({lineno, {cols[0], cols[1], *etype}});
    ++report.entities_loaded;
  }
  return {std::move(out), std::move(report)};
}

inline std::pair<std::vector<RelationRow>, IngestReport> parse_relation_rows(
    std::istream& in) {
  std::vector<RelationRow> out;
  IngestReport report;
  std::string line;
  if (!std::getline(in, line) ||
      strip_cr(line) != "src_id\tdst_id\trel_type\tdoc_id")
    throw FatalIngestError(
        "relations file: expected header 'src_id\\tdst_id\\trel_type\\tdoc_id'");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 4) {
      report.reject(lineno, "expected 4 columns, got " + std::to_string(cols.size()));
      continue;
    }
    if (cols[0].empty() || cols[1].empty()) {
      report.reject(lineno, "empty endpoint id");
      continue;
    }
    if (cols[0] == cols[1]) {
      report.reject(lineno, "self-loop on '" + cols[0] + "'");
      continue;
    }
    std::string rtype = upper(cols[2]);
    if (!valid_rtype(rtype)) {
      report.reject(lineno, "invalid relation type '" + cols[2] + "'");
      continue;
    }
    Relation r{cols[0], cols[1], std::move(rtype), {}};
    for (const auto& doc : split(cols[3], ';'))
      if (!doc.empty()) r.evidence.insert(doc);
    out.push_back({lineno, std::move(r)});
    ++report.relations_loaded;
  }
  return {std::move(out), std::move(report)};
}

}  // namespace detail

inline constexpr const char* kEntitiesHeader = "id\tname\ttype";
inline constexpr const char* kRelationsHeader = "src_id\tdst_id\trel_type\tdoc_id";

// Entities TSV: header `id\tname\ttype`, one entity per row. Bad rows are
// logged and skipped; a wrong header is fatal.
inline std::pair<std::vector<Entity>, IngestReport> parse_entities(std::istream& in) {
  auto [rows, report] = detail::parse_entity_rows(in);
  std::vector<Entity> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.entity));
  return {std::move(out), std::move(report)};
}

// Relations TSV: header `src_id\tdst_id\trel_type\tdoc_id`; rel_type is
// uppercased; doc_id may hold several ids separated by ';' or be empty.
inline std::pair<std::vector<Relation>, IngestReport> parse_relations(std::istream& in) {
  auto [rows, report] = detail::parse_relation_rows(in);
  std::vector<Relation> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.relation));
  return {std::move(out), std::move(report)};
}

// parse -> add -> freeze. Relations referencing unknown entities are
// rejected with their line number; duplicate relation keys merge evidence.
inline std::pair<KnowledgeGraph, IngestReport> load_graph(std::istream& entities_in,
                                                          std::istream& relations_in) {
  KnowledgeGraph graph;
  auto [entity_rows, report] = detail::parse_entity_rows(entities_in);
  for (const auto& row : entity_rows) {
    try {
      graph.add_entity(row.entity);
    } catch (const DuplicateConflict&) {
      report.reject(row.line, "conflicting duplicate entity '" + row.entity.id + "'");
      --report.entities_loaded;
    }
  }

  auto [rows, rel_report] = detail::parse_relation_rows(relations_in);
  for (const auto& row : rows) {
    const Relation& r = row.relation;
    if (!graph.has_entity(r.src) || !graph.has_entity(r.dst)) {
      rel_report.reject(row.line, "relation references unknown entity '" +
                                      (graph.has_entity(r.src) ? r.dst : r.src) + "'");
      --rel_report.relations_loaded;
      continue;
    }
    std::size_t count_before = graph.relation_count();
    graph.add_relation(r);
    if (graph.relation_count() == count_before) ++rel_report.duplicates_merged;
  }
  report.merge(rel_report);
  graph.freeze();
  return {std::move(graph), std::move(report)};
}

inline std::pair<KnowledgeGraph, IngestReport> load_graph_files(
    const std::string& entities_path, const std::string& relations_path) {
  std::ifstream ein(entities_path);
  if (!ein) throw FatalIngestError("cannot read entities file: " + entities_path);
  std::ifstream rin(relations_path);
  if (!rin) throw FatalIngestError("cannot read relations file: " + relations_path);
  return load_graph(ein, rin);
}

}  // namespace kgraph
