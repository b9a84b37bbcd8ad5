#include "hog/baselines.hpp"

#include <algorithm>
#include <unordered_set>

#include "hog/interval_cover_tree.hpp"

namespace hog {

std::size_t overlap_length(std::string_view a, std::string_view b) {
  for (std::size_t len = std::min(a.size(), b.size()); len-- > 1;)
    if (a.substr(a.size() - len) == b.substr(0, len)) return len;
  return 0;
}

std::set<std::string> brute_force_ov(std::span<const std::string> strings) {
  std::set<std::string> ov;
  for (const auto& a : strings)
    for (const auto& b : strings) ov.insert(b.substr(0, overlap_length(a, b)));
  return ov;
}

std::set<std::string> brute_force_ov(const StringSet& p) {
  const auto strings = p.strings();
  return brute_force_ov(std::span<const std::string>(strings));
}

SuffixLists build_suffix_lists(const OverlapTrie& t, std::uint64_t* hops) {
  require_markable(t, "build_suffix_lists");
  const std::size_t n = t.node_count();
  SuffixLists lists;
  lists.begin.assign(n + 1, 0);
  std::uint64_t walked = 0;
  for (NodeId leaf : t.leaf_of)
    for (NodeId v = t.suffix_link[leaf]; v != kRoot; v = t.suffix_link[v]) ++lists.begin[v + 1];
  for (std::size_t v = 0; v < n; ++v) lists.begin[v + 1] += lists.begin[v];
  lists.items.resize(lists.begin[n]);
  std::vector<std::uint32_t> fill(lists.begin.begin(), lists.begin.end() - 1);
  for (StringIndex i = 0; i < t.string_count(); ++i) {
    NodeId v = t.suffix_link[t.leaf_of[i]];
    ++walked;
    for (; v != kRoot; v = t.suffix_link[v]) {
      lists.items[fill[v]++] = i;
      ++walked;
    }
  }
  if (hops) *hops = walked;
  return lists;
}

MarkVector mark_hog_cazaux(const OverlapTrie& t, MarkStats* stats, const MarkOptions& options) {
  std::uint64_t hops = 0;
  const SuffixLists lists = build_suffix_lists(t, &hops);
  MarkVector marks = base_marks(t);
  // last_leaf[i] == j: string i already found its overlap with string j.
  std::vector<StringIndex> last_leaf(t.string_count(), kNoString);
  std::uint64_t updates = 0;
  for (StringIndex j = 0; j < t.string_count(); ++j) {
    if ((j & 255) == 0 && options.stop.stop_requested()) throw TimeoutError();
    // Proper prefixes of p_j, deepest first: the first u listing i is ov(p_i, p_j).
    for (NodeId u = t.parent[t.leaf_of[j]]; u != kRoot; u = t.parent[u])
      for (StringIndex i : lists.of(u))
        if (last_leaf[i] != j) {
          last_leaf[i] = j;
          marks.set(u);
          ++updates;
        }
  }
  if (stats) *stats = {.suffix_hops = hops, .count_updates = updates};
  return marks;
}

MarkVector mark_hog_parkcpr(const OverlapTrie& t, MarkStats* stats, const MarkOptions& options) {
  require_markable(t, "mark_hog_parkcpr");
  MarkVector marks = base_marks(t);
  IntervalCoverTree cover(static_cast<std::uint32_t>(t.string_count()));
  std::uint64_t hops = 0;
  for (StringIndex i = 0; i < t.string_count(); ++i) {
    if ((i & 1023) == 0 && options.stop.stop_requested()) throw TimeoutError();
    cover.checkpoint();
    NodeId v = t.suffix_link[t.leaf_of[i]];
    ++hops;
    for (; v != kRoot; v = t.suffix_link[v], ++hops) {
      if (cover.uncovered(t.start[v], t.end[v]) > 0) {
        marks.set(v);
        cover.cover(t.start[v], t.end[v]);
      }
    }
    cover.rollback();
  }
  if (stats) *stats = {.suffix_hops = hops, .count_updates = cover.writes()};
  return marks;
}

MarkVector mark_hog_khan(const OverlapTrie& t, MarkStats* stats, const MarkOptions& options) {
  std::uint64_t hops = 0;
  const SuffixLists lists = build_suffix_lists(t, &hops);
  const std::size_t n = t.node_count();
  MarkVector marks = base_marks(t);

  // top[i]: lowest node on the current root path having p_i as a suffix.
  // active[u]: number of strings whose top is u.
  std::vector<NodeId> top(t.string_count(), kNoNode);
  std::vector<std::uint32_t> active(n, 0);
  std::vector<NodeId> saved;  // previous tops, one per push
  std::vector<NodeId> path;
  std::uint64_t pushes = 0;

  auto leave = [&](NodeId u) {
    const auto items = lists.of(u);
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      const NodeId prev = saved.back();
      saved.pop_back();
      --active[u];
      top[*it] = prev;
      if (prev != kNoNode) ++active[prev];
    }
  };

  for (NodeId v = 0; v < n; ++v) {
    if ((v & 4095) == 0 && options.stop.stop_requested()) throw TimeoutError();
    if (v != kRoot)
      while (path.back() != t.parent[v]) {
        leave(path.back());
        path.pop_back();
      }
    // Before v's own lists are pushed, every active node on the path is a
    // proper prefix of v, i.e. ov(p_i, v) for the strings topping there.
    if (t.in_p(v))
      for (auto it = path.rbegin(); it != path.rend() && *it != kRoot; ++it)
        if (active[*it] > 0) marks.set(*it);
    for (StringIndex i : lists.of(v)) {
      const NodeId prev = top[i];
      if (prev != kNoNode) --active[prev];
      top[i] = v;
      ++active[v];
      saved.push_back(prev);
      ++pushes;
    }
    path.push_back(v);
  }
  if (stats) *stats = {.suffix_hops = hops, .count_updates = pushes};
  return marks;
}

MarkVector mark_hog_oracle(const OverlapTrie& t) {
  require_markable(t, "mark_hog_oracle");
  std::vector<std::string> p;
  p.reserve(t.string_count());
  for (NodeId v : t.leaf_of) p.emplace_back(t.spell(v));
  const auto ov = brute_force_ov(std::span<const std::string>(p));
  std::unordered_set<std::string_view> keep(ov.begin(), ov.end());
  MarkVector marks = base_marks(t);
  for (NodeId v = 0; v < t.node_count(); ++v)
    if (keep.contains(t.spell(v))) marks.set(v);
  return marks;
}

}  // namespace hog
