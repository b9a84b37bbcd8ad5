#include "hog/query_engine.hpp"

#include <algorithm>
#include <numeric>

namespace hog {

QueryEngine::QueryEngine(const OverlapTrie& structure, const StringSet& strings)
    : trie_(&structure), strings_(&strings) {
  if (structure.string_count() != strings.size()) throw Error("structure and string set disagree on k");
  next_.resize(strings.size() + 1);
  std::iota(next_.begin(), next_.end(), StringIndex{0});
  answer_.resize(strings.size());
}

StringIndex QueryEngine::canonical(StringIndex orig) const {
  if (orig >= strings_->original_count()) throw Error("string index out of range");
  return strings_->orig_to_sorted(orig);
}

StringIndex QueryEngine::next_unanswered(StringIndex j) {
  // Path halving; any entry that is not the identity was already journaled.
  while (next_[j] != j) {
    next_[j] = next_[next_[j]];
    j = next_[j];
  }
  return j;
}

template <typename Visit>
void QueryEngine::walk(StringIndex si, std::uint32_t min_depth, Visit&& visit) {
  const OverlapTrie& t = *trie_;
  touched_.clear();
  last_path_ = 0;
  bool more = true;
  for (NodeId v = t.suffix_link[t.leaf_of[si]]; more && t.depth[v] >= min_depth; v = t.suffix_link[v]) {
    ++last_path_;
    // A node that is p_j itself is not a proper prefix of p_j; p_j sorts
    // first in its own interval.
    const StringIndex lo = t.start[v] + (t.in_p(v) ? 1 : 0);
    const StringIndex hi = t.end[v];
    for (StringIndex j = next_unanswered(lo); j <= hi; j = next_unanswered(j + 1)) {
      next_[j] = j + 1;
      touched_.push_back(j);
      if (!visit(j, t.depth[v])) {
        more = false;
        break;
      }
    }
    if (v == kRoot) break;
  }
  for (StringIndex j : touched_) next_[j] = j;
}

Overlap QueryEngine::one_to_one(StringIndex i, StringIndex j) {
  const OverlapTrie& t = *trie_;
  const StringIndex si = canonical(i);
  const StringIndex sj = canonical(j);
  const NodeId target = t.leaf_of[sj];
  last_path_ = 0;
  for (NodeId v = t.suffix_link[t.leaf_of[si]];; v = t.suffix_link[v]) {
    ++last_path_;
    if (v == kRoot) return {};
    if (t.start[v] <= sj && sj <= t.end[v] && v != target) return {t.depth[v], t.spell(v)};
  }
}

std::vector<std::uint32_t> QueryEngine::one_to_all(StringIndex i) {
  walk(canonical(i), 0, [&](StringIndex j, std::uint32_t depth) {
    answer_[j] = depth;
    return true;
  });
  std::vector<std::uint32_t> out(strings_->original_count());
  for (StringIndex o = 0; o < out.size(); ++o) out[o] = answer_[strings_->orig_to_sorted(o)];
  return out;
}

std::vector<StringIndex> QueryEngine::report(StringIndex i, std::uint32_t min_length) {
  std::vector<StringIndex> out;
  walk(canonical(i), min_length, [&](StringIndex j, std::uint32_t) {
    for (StringIndex o : strings_->originals_of(j)) out.push_back(o);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t QueryEngine::count(StringIndex i, std::uint32_t min_length) {
  std::size_t total = 0;
  walk(canonical(i), min_length, [&](StringIndex j, std::uint32_t) {
    total += strings_->originals_of(j).size();
    return true;
  });
  return total;
}

std::vector<StringIndex> QueryEngine::top(StringIndex i, std::size_t c) {
  const StringIndex si = canonical(i);
  c = std::min(c, size());
  std::vector<StringIndex> out;
  if (c == 0) return out;
  out.reserve(c);
  walk(si, 0, [&](StringIndex j, std::uint32_t) {
    for (StringIndex o : strings_->originals_of(j)) {
      out.push_back(o);
      if (out.size() == c) return false;
    }
    return true;
  });
  return out;
}

std::uint64_t QueryEngine::state_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (StringIndex x : next_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hog
