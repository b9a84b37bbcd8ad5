#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hog/overlap_trie.hpp"

namespace hog {

struct Overlap {
  std::uint32_t length = 0;
  std::string_view text;
};

// Suffix-prefix queries answered by walking suffix paths of a HOG (any
// structure with leaf intervals works; the HOG has the shortest paths).
//
// Indices are 0-based *original* input indices; duplicated input strings share
// the answers of their canonical string. An engine holds mutable scratch and
// serves one query at a time; the structure and string set are borrowed and
// must outlive it.
//
// The skip array over sorted positions jumps past strings already answered in
// the current walk. It is identity between queries; only the entries touched
// by a query are reset afterwards.
class QueryEngine {
 public:
  QueryEngine(const OverlapTrie& structure, const StringSet& strings);

  std::size_t size() const { return strings_->original_count(); }

  Overlap one_to_one(StringIndex i, StringIndex j);

  // Overlap length with every string, indexed by original index.
  std::vector<std::uint32_t> one_to_all(StringIndex i);

  // Strings j with |ov(p_i, p_j)| >= min_length, ascending.
  std::vector<StringIndex> report(StringIndex i, std::uint32_t min_length);
  std::size_t count(StringIndex i, std::uint32_t min_length);

  // min(c, size()) strings in non-increasing overlap order; ties and the
  // zero-overlap tail come in arbitrary (ascending sorted-string) order.
  std::vector<StringIndex> top(StringIndex i, std::size_t c);

  // Suffix path nodes visited by the last query.
  std::uint64_t last_path_length() const { return last_path_; }
  std::uint64_t state_hash() const;

 private:
  StringIndex canonical(StringIndex orig) const;
  StringIndex next_unanswered(StringIndex j);

  // Walks the suffix path of sorted string `si` down to depth `min_depth`,
  // calling visit(j, depth) once per newly answered sorted string j; stops
  // early when visit returns false.
  template <typename Visit>
  void walk(StringIndex si, std::uint32_t min_depth, Visit&& visit);

  const OverlapTrie* trie_;
  const StringSet* strings_;
  std::vector<StringIndex> next_;
  std::vector<StringIndex> touched_;
  std::vector<std::uint32_t> answer_;
  std::uint64_t last_path_ = 0;
};

}  // namespace hog
