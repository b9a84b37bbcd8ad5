#pragma once

#include <cstdint>

#include "hog/overlap_trie.hpp"

namespace hog {

// Marks root, P, and every node on the suffix path of some string of P. A
// chain already walked is not walked again, so the total number of suffix
// link hops (reported through `hops`) is at most the node count.
MarkVector mark_ehog(const OverlapTrie& act, std::uint64_t* hops = nullptr);

struct EhogBuild {
  OverlapTrie ehog;
  std::size_t act_nodes = 0;
  double seconds = 0;  // T(E): ACT construction, marking and contraction
  std::uint64_t suffix_hops = 0;
};

EhogBuild build_ehog(const StringSet& p);

}  // namespace hog
