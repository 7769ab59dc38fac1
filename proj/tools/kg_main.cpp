// kg: command-line analytics over typed entity/relation extraction files.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgraph/centrality.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ingest.hpp"
#include "kgraph/query.hpp"
#include "kgraph/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUsageError = 2;

struct LoadFlags {
  std::string entities_path;
  std::string relations_path;
};

void add_load_flags(CLI::App* cmd, LoadFlags& flags) {
  cmd->add_option("--entities", flags.entities_path, "Entities TSV file")
      ->required();
  cmd->add_option("--relations", flags.relations_path, "Relations TSV file")
      ->required();
}

std::pair<kgraph::KnowledgeGraph, kgraph::IngestReport> load(const LoadFlags& flags) {
  return kgraph::load_graph_files(flags.entities_path, flags.relations_path);
}

std::optional<kgraph::EntityType> parse_type_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto t = kgraph::parse_entity_type(s);
  if (!t) throw CLI::ValidationError("--type", "unknown entity type '" + s + "'");
  return t;
}

std::set<kgraph::EntityType> parse_type_list(const std::string& csv) {
  std::set<kgraph::EntityType> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string token = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) {
      auto t = kgraph::parse_entity_type(token);
      if (!t)
        throw CLI::ValidationError("--intermediate-types",
                                   "unknown entity type '" + token + "'");
      out.insert(*t);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_stats(const LoadFlags& flags) {
  auto [graph, report] = load(flags);
  std::cout << "entities: " << graph.node_count() << "\n";
  std::cout << "relations: " << graph.relation_count() << "\n";
  std::cout << "edges: " << graph.edge_count() << "\n";
  for (auto [t, count] : graph.type_counts())
    std::cout << kgraph::to_string(t) << ": " << count << "\n";
  std::cout << "rows rejected: " << report.rows_rejected << "\n";
  for (const auto& [line, reason] : report.rejection_log)
    std::cerr << "rejected line " << line << ": " << reason << "\n";
  return kExitOk;
}

int run_katz(const LoadFlags& flags, double alpha_scale, std::size_t top,
             const std::string& type_flag, bool no_normalize) {
  auto filter = parse_type_flag(type_flag);
  auto [graph, report] = load(flags);
  kgraph::KatzParams params;
  params.alpha_scale = alpha_scale;
  params.normalize = !no_normalize;
  auto result = kgraph::katz_centrality(graph, params);
  auto rows = kgraph::rank(result, graph, top, filter);
  std::cout << kgraph::render_rank_table(rows);
  return kExitOk;
}

int run_ego(const LoadFlags& flags, const std::string& node,
            const std::string& format) {
  auto [graph, report] = load(flags);
  auto sub = kgraph::ego_subnetwork(graph, node);
  if (format == "stats") {
    std::cout << "nodes: " << sub.node_count() << " edges: " << sub.edge_count()
              << "\n";
    for (auto [t, count] : sub.type_counts)
      std::cout << kgraph::to_string(t) << ": " << count << "\n";
  } else if (format == "dot") {
    std::cout << kgraph::to_dot(graph, sub);
  } else {
    std::cout << kgraph::to_graphml(graph, sub);
  }
  return kExitOk;
}

int run_paths(const LoadFlags& flags, const std::string& from,
              const std::string& to, std::size_t max_hops,
              const std::string& types_csv) {
  kgraph::PathConstraint constraint;
  constraint.max_hops = max_hops;
  constraint.allowed_intermediate_types = parse_type_list(types_csv);
  auto [graph, report] = load(flags);
  for (const auto& path : kgraph::paths_between(graph, from, to, constraint)) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) std::cout << " -> ";
      std::cout << path[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_treats(const LoadFlags& flags, const std::string& diseases_file,
               const std::string& diseases_csv, const std::string& rtype) {
  std::set<std::string> diseases;
  if (!diseases_file.empty()) {
    std::ifstream in(diseases_file);
    if (!in) {
      std::cerr << "kg: cannot read diseases file: " << diseases_file << "\n";
      return kExitInputError;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) diseases.insert(line);
    }
  }
  std::size_t start = 0;
  while (start <= diseases_csv.size() && !diseases_csv.empty()) {
    std::size_t comma = diseases_csv.find(',', start);
    std::string token = diseases_csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) diseases.insert(token);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  auto [graph, report] = load(flags);
  auto result = kgraph::treatments_for(graph, diseases, rtype);
  for (const auto& id : result.unknown_diseases)
    std::cerr << "warning: unknown disease id '" << id << "'\n";
  std::cout << kgraph::render_treatment_table(result.hits, rtype);
  return kExitOk;
}

int run_export(const LoadFlags& flags, const std::string& format,
               const std::string& out_path) {
  auto [graph, report] = load(flags);
  std::string text =
      format == "dot" ? kgraph::to_dot(graph) : kgraph::to_graphml(graph);
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "kg: cannot write output file: " << out_path << "\n";
    return kExitInputError;
  }
  out << text;
  if (!out.flush()) {
    std::cerr << "kg: write failed: " << out_path << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed knowledge-graph analytics"};
  app.require_subcommand(1);

  LoadFlags flags;

  auto* stats = app.add_subcommand("stats", "Graph size, type counts, ingest summary");
  add_load_flags(stats, flags);

  auto* katz = app.add_subcommand("katz", "Katz centrality ranking");
  add_load_flags(katz, flags);
  double alpha_scale = 0.85;
  std::size_t top = 20;
  std::string type_flag;
  bool no_normalize = false;
  katz->add_option("--alpha-scale", alpha_scale,
                   "Attenuation as a fraction of 1/lambda_max, in (0,1)");
  katz->add_option("--top", top, "Number of rows");
  katz->add_option("--type", type_flag, "Restrict ranking to one entity type");
  katz->add_flag("--no-normalize", no_normalize, "Report raw series sums");

  auto* ego = app.add_subcommand("ego", "Ego subnetwork of a node");
  add_load_flags(ego, flags);
  std::string node;
  std::string ego_format = "stats";
  ego->add_option("--node", node, "Center entity id")->required();
  ego->add_option("--format", ego_format, "dot, graphml, or stats")
      ->check(CLI::IsMember({"dot", "graphml", "stats"}));

  auto* paths = app.add_subcommand("paths", "Bounded-hop simple paths");
  add_load_flags(paths, flags);
  std::string from, to, types_csv;
  std::size_t max_hops = 3;
  paths->add_option("--from", from, "Start entity id")->required();
  paths->add_option("--to", to, "End entity id")->required();
  paths->add_option("--max-hops", max_hops, "Maximum edges per path")
      ->check(CLI::PositiveNumber);
  paths->add_option("--intermediate-types", types_csv,
                    "Comma-separated types allowed for intermediate nodes");

  auto* treats = app.add_subcommand("treats", "Drug hits for a disease list");
  add_load_flags(treats, flags);
  std::string diseases_file, diseases_csv;
  std::string rtype = "TREATS";
  treats->add_option("--diseases-file", diseases_file, "File with one disease id per line");
  treats->add_option("--diseases", diseases_csv, "Comma-separated disease ids");
  treats->add_option("--rtype", rtype, "Relation type to match");

  auto* exp = app.add_subcommand("export", "Serialize the whole graph");
  add_load_flags(exp, flags);
  std::string export_format = "dot";
  std::string out_path;
  exp->add_option("--format", export_format, "dot or graphml")
      ->check(CLI::IsMember({"dot", "graphml"}));
  exp->add_option("--out", out_path, "Output file (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (*stats) return run_stats(flags);
    if (*katz) {
      if (alpha_scale <= 0.0 || alpha_scale >= 1.0) {
        std::cerr << "kg: --alpha-scale must be in (0,1)\n";
        return kExitUsageError;
      }
      return run_katz(flags, alpha_scale, top, type_flag, no_normalize);
    }
    if (*ego) return run_ego(flags, node, ego_format);
    if (*paths) return run_paths(flags, from, to, max_hops, types_csv);
    if (*treats) {
      if (diseases_file.empty() && diseases_csv.empty()) {
        std::cerr << "kg: treats requires --diseases-file or --diseases\n";
        return kExitUsageError;
      }
      return run_treats(flags, diseases_file, diseases_csv, rtype);
    }
    if (*exp) return run_export(flags, export_format, out_path);
  } catch (const kgraph::SameEndpoints& e) {
    std::cerr << "kg: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const kgraph::UnknownEntity& e) {
    std::cerr << "kg: " << e.what() << "\n";
    return kExitInputError;
  } catch (const kgraph::FatalIngestError& e) {
    std::cerr << "kg: " << e.what() << "\n";
    return kExitInputError;
  } catch (const kgraph::GraphError& e) {
    std::cerr << "kg: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "kg: " << e.what() << "\n";
    return kExitUsageError;
  }
  return kExitUsageError;
}
