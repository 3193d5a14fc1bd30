#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pdawg/matcher.hpp"
#include "pdawg/oracle.hpp"
#include "pdawg/pdawg.hpp"
#include "pdawg/pstree.hpp"

namespace pdawg {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labels are {"s": "<char>"} or {"n": <int>}.
Json symbol_to_json(Symbol s);
Symbol symbol_from_json(const Json& j);

/// {nodes:[{len, edges:[[label, target, primary]], slink}], source,
/// sink_history, text}. Node ids are exported ids (⊤ omitted, source = 0).
Json pdawg_to_json(const Pdawg& g);
Pdawg pdawg_from_json(const Json& j);

Json alphabet_to_json(const AlphabetSpec& a);
AlphabetSpec alphabet_from_json(const Json& j);

struct IndexFile {
  static constexpr const char* kFormat = "pdawg-index";
  static constexpr int kVersion = 1;

  AlphabetSpec alphabet;
  Pdawg pdawg;
  std::optional<OccurrenceIndex> occurrences;

  Json to_json() const;
  static IndexFile from_json(const Json& j);

  std::string dump() const;
  static IndexFile parse(const std::string& text);
  void save(const std::string& path) const;
  static IndexFile load(const std::string& path);
};

struct StatsExtra {
  std::size_t pi_size = 0;
  std::size_t sigma_size = 0;
  std::size_t redirected_secondary = 0;
  std::size_t slinks_deleted = 0;
};

/// {n, nodes, edges, primary, secondary, pi_size, sigma_size,
/// build_steps:{redirected_secondary, slinks_deleted}, prev}.
Json stats_json(const Pdawg& g, const StatsExtra& extra, const AlphabetSpec* alphabet = nullptr);

// Graphviz. Primary edges are drawn as a double line, secondary edges as a
// single line, suffix links dashed.
std::string pdawg_dot(const Pdawg& g, const AlphabetSpec* alphabet = nullptr);
/// Weiner links are dotted; upward links (when present) are drawn in grey.
std::string pstree_dot(const PSTree& tree, const AlphabetSpec* alphabet = nullptr);
std::string psauto_dot(const PSAuto& a, const AlphabetSpec* alphabet = nullptr);

}  // namespace pdawg
