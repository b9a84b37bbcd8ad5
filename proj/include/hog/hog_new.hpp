#pragma once

#include <cstdint>
#include <vector>

#include "hog/marking.hpp"

namespace hog {

// Favoured-descendant bookkeeping for lazy subtree blackening.
//
// Every node of P owns one virtual white leaf, so a P-node's effective child
// count is its child count plus one. A node is favoured when that count is not
// 1, or when it is in P; a unary chain is represented by the favoured node at
// its bottom.
//
// The fields a pass touches per node share one record:
//   link      suffix link, copied from the trie
//   fav_desc  closest favoured descendant-or-self
//   count     child subtrees still holding a white leaf
//   fav_anc   closest favoured proper ancestor (root for the root)
struct FavStructure {
  struct Node {
    NodeId link;
    NodeId fav_desc;
    std::uint32_t count;
    NodeId fav_anc;
  };

  // (node, count before the write), undone in reverse after each pass.
  struct JournalEntry {
    NodeId node;
    std::uint32_t count;
  };

  std::vector<Node> nodes;
  std::vector<std::uint32_t> base_count;  // effective child count
  std::vector<JournalEntry> journal;

  std::size_t node_count() const { return nodes.size(); }
  bool favoured(NodeId v) const { return nodes[v].fav_desc == v; }
  bool counts_at_base() const;
};

FavStructure precompute_fav(const OverlapTrie& t);

// Marks root, P and Ov(P) with the favoured-descendant blackening scheme.
// `fav` must come from precompute_fav(t) and is left with every count at its
// base value.
MarkVector mark_hog_new(const OverlapTrie& t, FavStructure& fav, MarkStats* stats = nullptr,
                        const MarkOptions& options = {});

MarkVector mark_hog_new(const OverlapTrie& t, MarkStats* stats = nullptr, const MarkOptions& options = {});

}  // namespace hog
