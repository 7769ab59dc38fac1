#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraph {

enum class EntityType { Protein, Drug, Disease, Taxonomy };

inline constexpr std::array<EntityType, 4> kAllEntityTypes = {
    EntityType::Protein, EntityType::Drug, EntityType::Disease,
    EntityType::Taxonomy};

inline std::string_view to_string(EntityType t) {
  switch (t) {
    case EntityType::Protein:  return "protein";
    case EntityType::Drug:     return "drug";
    case EntityType::Disease:  return "disease";
    case EntityType::Taxonomy: return "taxonomy";
  }
  return "?";
}

// Case-insensitive; anything outside the four categories is rejected.
inline std::optional<EntityType> parse_entity_type(std::string_view s) {
  std::string lower;
  lower.reserve(s.size());
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "protein")  return EntityType::Protein;
  if (lower == "drug")     return EntityType::Drug;
  if (lower == "disease")  return EntityType::Disease;
  if (lower == "taxonomy") return EntityType::Taxonomy;
  return std::nullopt;
}

struct Entity {
  std::string id;     // canonical key, unique in the graph
  std::string name;   // display string
  EntityType etype;

  bool operator==(const Entity&) const = default;
};

struct Relation {
  std::string src;
  std::string dst;
  std::string rtype;               // uppercase A-Z and underscore
  std::set<std::string> evidence;  // document reference ids

  bool operator==(const Relation&) const = default;
};

inline bool valid_entity_id(std::string_view id) {
  if (id.empty()) return false;
  return id.find('\t') == std::string_view::npos &&
         id.find('\n') == std::string_view::npos;
}

inline bool valid_rtype(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!((c >= 'A' && c <= 'Z') || c == '_')) return false;
  return true;
}

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateConflict : GraphError { using GraphError::GraphError; };
struct UnknownEntity : GraphError { using GraphError::GraphError; };
struct SelfLoop : GraphError { using GraphError::GraphError; };
struct FrozenGraph : GraphError { using GraphError::GraphError; };
struct NotFrozen : GraphError { using GraphError::GraphError; };
struct SameEndpoints : GraphError { using GraphError::GraphError; };
struct NoConvergence : GraphError { using GraphError::GraphError; };

}  // namespace kgraph
