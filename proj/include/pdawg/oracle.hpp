#pragma once

// Definition-level structures. Quadratic or worse; meant for tests and
// small inputs only.

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pdawg/pdawg.hpp"
#include "pdawg/pstring.hpp"

namespace pdawg {

/// Every factor of w (including ε) with its sorted end positions.
using FactorTable = std::unordered_map<PvString, std::vector<std::size_t>, PvStringHash>;
FactorTable enumerate_factors(const PvString& w);

/// { i in 0..|w| : x = <w[i-|x|+1 : i]> }.
std::vector<std::size_t> rpos(const PvString& w, const PvString& x);

/// REx(y): the adjusted symbols that can follow an occurrence of y.
std::vector<Symbol> right_extensions(const PvString& w, const PvString& y, const std::vector<std::size_t>& ends);

struct OracleEdge {
  Symbol label;
  std::size_t target = 0;
  bool primary = false;
};

struct OracleClass {
  std::vector<PvString> members;  // sorted by length
  std::vector<std::size_t> rpos;
  std::vector<OracleEdge> edges;  // label order
  std::optional<std::size_t> slink;
  const PvString& max() const { return members.back(); }
  const PvString& min() const { return members.front(); }
};

struct OraclePdawg {
  PvString text;
  std::vector<OracleClass> classes;
  std::size_t source = 0;
  std::size_t edge_count() const;
  std::optional<std::size_t> class_of(const PvString& x) const;
  std::unordered_map<PvString, std::size_t, PvStringHash> index;
};

OraclePdawg build_oracle_pdawg(const PvString& w);
CanonicalPdawg canonical_form(const OraclePdawg& g);

struct PSTrieNode {
  std::map<Symbol, std::size_t> children;
  bool is_suffix = false;
  std::size_t depth = 0;
  std::size_t witness = 0;  // start of the first suffix through this node (1-based)
};

struct PSTrie {
  std::vector<PSTrieNode> nodes;
  std::size_t root = 0;
  PvString text;  // <T>
};

PSTrie build_pstrie(const PString& t);
PSTrie build_pstrie(const PvString& pv);

struct PSAutoState {
  std::map<Symbol, std::size_t> transitions;
  bool accepting = false;
};

struct PSAuto {
  std::vector<PSAutoState> states;
  std::size_t initial = 0;
  bool accepts(std::span<const Symbol> x) const;
};

/// Minimal DFA of the suffix trie, by Moore partition refinement.
PSAuto build_psauto(const PString& t);
PSAuto build_psauto(const PvString& pv);
PSAuto minimize(const PSTrie& trie);

struct NaivePSTreeNode {
  std::size_t parent = 0;
  std::size_t depth = 0;
  std::size_t witness = 0;  // a suffix start p (1-based) whose suffix passes through this node
  bool is_suffix = false;
  std::size_t suffix_start = 0;  // when is_suffix; n+1 for the root
  std::map<Symbol, std::size_t> children;  // first symbol of the edge label
};

struct NaivePSTree {
  std::vector<NaivePSTreeNode> nodes;
  std::size_t root = 0;
  PvString text;  // <S>
  /// The label of the edge into `u`.
  std::vector<Symbol> edge_label(std::size_t u) const;
  /// The path string of `u`.
  PvString path(std::size_t u) const;
};

NaivePSTree build_pstree_naive(const PString& s);
NaivePSTree build_pstree_naive(const PvString& pv);
/// Expands every edge back into single-symbol steps.
PSTrie decompact(const NaivePSTree& tree);

/// Symbol at depth j (1-based) along the suffix starting at p: Z(<S>[p+j-1], j-1).
Symbol suffix_symbol(const PvString& s, std::size_t p, std::size_t j);

std::vector<std::size_t> scan_occurrences(const PString& t, const PString& p);
std::vector<std::size_t> scan_occurrences(const PvString& w, const PvString& p);

/// Family T_k = x1 a1 ... xk ak x1 a1 ... xk ak with distinct parameters x_i and statics a_i.
PString t_family(std::size_t k);

}  // namespace pdawg
