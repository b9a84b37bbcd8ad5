#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hog/string_set.hpp"

namespace hog {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = ~NodeId{0};
inline constexpr NodeId kRoot = 0;

enum class TrieKind { Act, Ehog, Hog };

std::string_view kind_name(TrieKind kind);

// Label of the tree edge into a node: text[offset, offset + length).
struct EdgeLabel {
  std::uint64_t offset = 0;
  std::uint32_t length = 0;

  std::uint64_t end() const { return offset + length; }
};

// Shared representation of the Aho-Corasick trie, the EHOG and the HOG.
//
// Node ids are dense and in preorder with children visited in ascending
// string order, so the preorder leaf sequence is the lexicographic order
// of P. Every per-node attribute is a flat array indexed by NodeId.
//
// The string a node represents is text[label.end() - depth, label.end()); edge
// labels never copy bytes out of the StringSet text buffer.
struct OverlapTrie {
  TrieKind kind = TrieKind::Act;
  std::shared_ptr<const std::string> text;

  std::vector<NodeId> parent;
  std::vector<std::uint32_t> depth;
  std::vector<EdgeLabel> label;
  std::vector<NodeId> suffix_link;

  // CSR children: child_ids[child_begin[v] .. child_begin[v+1]) in byte order.
  std::vector<std::uint32_t> child_begin;
  std::vector<NodeId> child_ids;

  std::vector<NodeId> leaf_of;          // sorted string index -> node
  std::vector<StringIndex> string_of;   // node -> sorted string index or kNoString
  std::vector<StringIndex> start, end;  // leaf interval, inclusive, 0-based

  std::size_t node_count() const { return parent.size(); }
  std::size_t string_count() const { return leaf_of.size(); }

  std::span<const NodeId> children(NodeId v) const {
    return std::span<const NodeId>(child_ids).subspan(child_begin[v], child_begin[v + 1] - child_begin[v]);
  }
  bool is_leaf(NodeId v) const { return child_begin[v] == child_begin[v + 1]; }
  bool in_p(NodeId v) const { return string_of[v] != kNoString; }

  std::string_view spell(NodeId v) const {
    return std::string_view(*text).substr(label[v].end() - depth[v], depth[v]);
  }
  std::string_view edge_text(NodeId v) const {
    return std::string_view(*text).substr(label[v].offset, label[v].length);
  }
  unsigned char first_byte(NodeId v) const { return static_cast<unsigned char>((*text)[label[v].offset]); }

  // Child of v whose edge starts with `byte`, or kNoNode. ACT only: siblings
  // of a contracted structure can share a first byte.
  NodeId child(NodeId v, unsigned char byte) const;
};

// Per-node membership in a contracted structure.
struct MarkVector {
  std::vector<std::uint8_t> bits;

  MarkVector() = default;
  explicit MarkVector(std::size_t nodes) : bits(nodes, 0) {}

  bool operator[](NodeId v) const { return bits[v] != 0; }
  void set(NodeId v) { bits[v] = 1; }
  std::size_t size() const { return bits.size(); }
  std::size_t count() const;

  bool operator==(const MarkVector&) const = default;
};

// Root and every P-node marked.
MarkVector base_marks(const OverlapTrie& t);

OverlapTrie build_act(const StringSet& p);

// Recomputes start/end from string_of and the preorder layout.
void compute_leaf_intervals(OverlapTrie& t);

// Keeps exactly the marked nodes. Parents become nearest marked ancestors,
// suffix links the first marked node on the old suffix chain.
OverlapTrie contract(const OverlapTrie& t, const MarkVector& marks, TrieKind new_kind);

// Empty iff every structural invariant holds.
std::vector<std::string> verify_structure(const OverlapTrie& t);

// All node strings, in node order.
std::vector<std::string> node_strings(const OverlapTrie& t);

// One line per node in id order:
//   id parent depth label suffix_link start end string
// label is escaped (\\, \s for space, \n, \r, \t, \xHH); indices are 0-based
// and "-" stands for "none".
void serialize(const OverlapTrie& t, std::ostream& out);

}  // namespace hog
