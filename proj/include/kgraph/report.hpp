#pragma once

#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kgraph/centrality.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/query.hpp"
#include "kgraph/types.hpp"

namespace kgraph {

// Node colors follow the figure legend: proteins blue, drugs green,
// diseases red, organisms orange.
struct ColorMap {
  std::map<EntityType, std::string> colors = {
      {EntityType::Protein, "blue"},
      {EntityType::Drug, "green"},
      {EntityType::Disease, "red"},
      {EntityType::Taxonomy, "orange"},
  };

  const std::string& color(EntityType t) const { return colors.at(t); }
};

enum class TableFormat { Tsv, Markdown };

namespace detail {

inline std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", score);
  return buf;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string join(const std::set<std::string>& items, char sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out.push_back(sep);
    out += item;
  }
  return out;
}

}  // namespace detail

// Rank / Entity / Type / Centrality Measure, scores to 4 decimal places.
inline std::string render_rank_table(const std::vector<RankedRow>& rows,
                                     TableFormat format = TableFormat::Tsv) {
  std::ostringstream out;
  if (format == TableFormat::Tsv) {
    out << "Rank\tEntity\tType\tCentrality Measure\n";
    for (const auto& row : rows)
      out << row.rank << '\t' << row.id << '\t' << to_string(row.etype) << '\t'
          << detail::format_score(row.score) << '\n';
  } else {
    out << "| Rank | Entity | Type | Centrality Measure |\n";
    out << "| --- | --- | --- | --- |\n";
    for (const auto& row : rows)
      out << "| " << row.rank << " | " << row.id << " | " << to_string(row.etype)
          << " | " << detail::format_score(row.score) << " |\n";
  }
  return out.str();
}

// Entry / Drug / Relation / Disease / Reference Id; entries are 1-based.
inline std::string render_treatment_table(const std::vector<TreatmentHit>& hits,
                                          const std::string& rtype = "TREATS") {
  std::ostringstream out;
  out << "Entry\tDrug\tRelation\tDisease\tReference Id\n";
  std::size_t entry = 1;
  for (const auto& hit : hits)
    out << entry++ << '\t' << hit.drug << '\t' << rtype << '\t' << hit.disease
        << '\t' << detail::join(hit.evidence, ';') << '\n';
  return out.str();
}

// Node ids, display names, and type colors for a whole graph or an
// extracted subnetwork; nodes and edges in lexicographic order.
class DotWriter {
 public:
  explicit DotWriter(ColorMap colors = {}) : colors_(std::move(colors)) {}

  std::string write(const KnowledgeGraph& g) const {
    std::ostringstream out;
    begin(out);
    for (std::size_t i = 0; i < g.node_count(); ++i)  // index order is id order
      node(out, g.id_of(i), g.entity(g.id_of(i)).name, g.type_of(i));
    for (auto [u, v] : g.edges())
      edge(out, g.id_of(u), g.id_of(v));
    out << "}\n";
    return out.str();
  }

  std::string write(const KnowledgeGraph& g, const Subnetwork& sub) const {
    std::ostringstream out;
    begin(out);
    for (const auto& id : sub.node_ids)
      node(out, id, g.entity(id).name, g.entity(id).etype);
    for (const auto& [a, b] : sub.edges) edge(out, a, b);
    out << "}\n";
    return out.str();
  }

 private:
  static void begin(std::ostringstream& out) {
    out << "graph G {\n";
    out << "  node [style=filled];\n";
  }
  void node(std::ostringstream& out, const std::string& id,
            const std::string& name, EntityType t) const {
    out << "  \"" << detail::dot_escape(id) << "\" [label=\""
        << detail::dot_escape(name) << "\", fillcolor=" << colors_.color(t)
        << "];\n";
  }
  static void edge(std::ostringstream& out, const std::string& a,
                   const std::string& b) {
    out << "  \"" << detail::dot_escape(a) << "\" -- \"" << detail::dot_escape(b)
        << "\";\n";
  }

  ColorMap colors_;
};

inline std::string to_dot(const KnowledgeGraph& g, const ColorMap& colors = {}) {
  return DotWriter(colors).write(g);
}

inline std::string to_dot(const KnowledgeGraph& g, const Subnetwork& sub,
                          const ColorMap& colors = {}) {
  return DotWriter(colors).write(g, sub);
}

// GraphML with node attributes name/type and edge attribute rtypes (the
// semicolon-joined relation types collapsed into that edge).
class GraphMlWriter {
 public:
  std::string write(const KnowledgeGraph& g) const {
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(g.id_of(u), g.id_of(v));

    std::ostringstream out;
    begin(out);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const Entity& e = g.entity(g.id_of(i));
      node(out, e);
    }
    auto rtype_index = build_rtype_index(g);
    for (const auto& [a, b] : edges)
      edge(out, a, b, rtype_index[{a, b}]);
    out << "</graph>\n</graphml>\n";
    return out.str();
  }

  std::string write(const KnowledgeGraph& g, const Subnetwork& sub) const {
    std::ostringstream out;
    begin(out);
    for (const auto& id : sub.node_ids) node(out, g.entity(id));
    auto rtype_index = build_rtype_index(g);
    for (const auto& [a, b] : sub.edges) edge(out, a, b, rtype_index[{a, b}]);
    out << "</graph>\n</graphml>\n";
    return out.str();
  }

 private:
  // rtypes per unordered id pair, gathered in one pass over the store
  static std::map<std::pair<std::string, std::string>, std::set<std::string>>
  build_rtype_index(const KnowledgeGraph& g) {
    std::map<std::pair<std::string, std::string>, std::set<std::string>> index;
    g.for_each_relation([&](const Relation& r) {
      auto key = r.src < r.dst ? std::make_pair(r.src, r.dst)
                               : std::make_pair(r.dst, r.src);
      index[key].insert(r.rtype);
    });
    return index;
  }

  static void begin(std::ostringstream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out << "<key id=\"d0\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n";
    out << "<key id=\"d1\" for=\"node\" attr.name=\"type\" attr.type=\"string\"/>\n";
    out << "<key id=\"d2\" for=\"edge\" attr.name=\"rtypes\" attr.type=\"string\"/>\n";
    out << "<graph id=\"G\" edgedefault=\"undirected\">\n";
  }
  static void node(std::ostringstream& out, const Entity& e) {
    out << "<node id=\"" << detail::xml_escape(e.id) << "\">"
        << "<data key=\"d0\">" << detail::xml_escape(e.name) << "</data>"
        << "<data key=\"d1\">" << to_string(e.etype) << "</data>"
        << "</node>\n";
  }
  static void edge(std::ostringstream& out, const std::string& a,
                   const std::string& b, const std::set<std::string>& rtypes) {
    out << "<edge source=\"" << detail::xml_escape(a) << "\" target=\""
        << detail::xml_escape(b) << "\">"
        << "<data key=\"d2\">" << detail::xml_escape(detail::join(rtypes, ';'))
        << "</data></edge>\n";
  }
};

inline std::string to_graphml(const KnowledgeGraph& g) {
  return GraphMlWriter().write(g);
}

inline std::string to_graphml(const KnowledgeGraph& g, const Subnetwork& sub) {
  return GraphMlWriter().write(g, sub);
}

}  // namespace kgraph
