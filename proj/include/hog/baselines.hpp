#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hog/marking.hpp"

namespace hog {

// Length of the longest proper suffix of `a` that is a proper prefix of `b`,
// by direct comparison.
std::size_t overlap_length(std::string_view a, std::string_view b);

// Ov(P) over every ordered pair, i == j included. Quadratic; for small sets.
std::set<std::string> brute_force_ov(std::span<const std::string> strings);
std::set<std::string> brute_force_ov(const StringSet& p);

// For each node u, the strings i such that u is a proper suffix of p_i
// (root excluded), grouped in CSR form.
struct SuffixLists {
  std::vector<std::uint32_t> begin;  // node_count + 1 offsets
  std::vector<StringIndex> items;

  std::span<const StringIndex> of(NodeId u) const {
    return std::span<const StringIndex>(items).subspan(begin[u], begin[u + 1] - begin[u]);
  }
  std::size_t total() const { return items.size(); }
};

SuffixLists build_suffix_lists(const OverlapTrie& t, std::uint64_t* hops = nullptr);

// Per-string upward scan against the suffix lists, O(n + k^2)-flavoured.
MarkVector mark_hog_cazaux(const OverlapTrie& t, MarkStats* stats = nullptr, const MarkOptions& options = {});

// Suffix path walk with an interval-cover segment tree over the sorted
// strings, O(n log k).
MarkVector mark_hog_parkcpr(const OverlapTrie& t, MarkStats* stats = nullptr, const MarkOptions& options = {});

// Preorder traversal keeping the lowest node on the root path having each
// string as a suffix, O(n).
MarkVector mark_hog_khan(const OverlapTrie& t, MarkStats* stats = nullptr, const MarkOptions& options = {});

// Marks nodes whose string is in brute_force_ov(P) u P u {eps}.
MarkVector mark_hog_oracle(const OverlapTrie& t);

}  // namespace hog
