#include "hog/hog_new.hpp"

#include <algorithm>
#include <stdexcept>

namespace hog {

bool FavStructure::counts_at_base() const {
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].count != base_count[v]) return false;
  return true;
}

FavStructure precompute_fav(const OverlapTrie& t) {
  require_markable(t, "precompute_fav");
  const std::size_t n = t.node_count();
  FavStructure fav;
  fav.nodes.resize(n);
  fav.base_count.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    fav.base_count[v] = static_cast<std::uint32_t>(t.children(v).size()) + (t.in_p(v) ? 1 : 0);
    fav.nodes[v].link = t.suffix_link[v];
    fav.nodes[v].count = fav.base_count[v];
  }

  // Children have larger ids than their parent; bottom-up is a reverse scan.
  // Written as selects: the favoured pattern is too irregular to predict.
  for (NodeId v = static_cast<NodeId>(n); v-- > 0;) {
    const std::uint32_t b = t.child_begin[v];
    const NodeId first_child = b < t.child_ids.size() ? t.child_ids[b] : v;
    const NodeId below = fav.nodes[first_child].fav_desc;
    const bool favoured = fav.base_count[v] != 1 || t.in_p(v);
    fav.nodes[v].fav_desc = favoured ? v : below;
  }
  fav.nodes[kRoot].fav_anc = kRoot;
  for (NodeId v = 1; v < n; ++v) {
    const NodeId p = t.parent[v];
    const FavStructure::Node& up = fav.nodes[p];
    fav.nodes[v].fav_anc = (p == kRoot || up.fav_desc == p) ? p : up.fav_anc;
  }
  return fav;
}

MarkVector mark_hog_new(const OverlapTrie& t, FavStructure& fav, MarkStats* stats, const MarkOptions& options) {
  require_markable(t, "mark_hog_new");
  if (fav.node_count() != t.node_count() || fav.base_count.size() != t.node_count())
    throw Error("favoured-descendant structure does not belong to this trie");

  MarkVector marks = base_marks(t);
  std::uint64_t hops = 0;
  std::uint64_t updates = 0;
  std::uint64_t max_journal = 0;
  bool within_bound = true;

  FavStructure::Node* const node = fav.nodes.data();
  auto& journal = fav.journal;

  for (StringIndex i = 0; i < t.string_count(); ++i) {
    if ((i & 1023) == 0 && options.stop.stop_requested()) throw TimeoutError();
    if (options.audit && !fav.counts_at_base()) throw std::logic_error("count not restored between passes");

    journal.clear();
    NodeId v = node[t.leaf_of[i]].link;
    ++hops;
    while (v != kRoot) {
      const NodeId rep = node[v].fav_desc;
      if (node[rep].count != 0) {
        marks.set(v);
        // Blacken v's subtree through its representative, then propagate to
        // favoured ancestors that lose their last white child subtree.
        journal.push_back({rep, node[rep].count});
        node[rep].count = 0;
        for (NodeId u = node[rep].fav_anc; u != kRoot; u = node[u].fav_anc) {
          if (options.audit && node[u].count == 0) throw std::logic_error("decrement of a blackened node");
          journal.push_back({u, node[u].count});
          if (--node[u].count > 0) break;
        }
      }
      v = node[v].link;
      ++hops;
    }

    const std::uint64_t len = t.depth[t.leaf_of[i]];
    max_journal = std::max<std::uint64_t>(max_journal, journal.size());
    if (journal.size() > 3 * len) within_bound = false;
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) node[it->node].count = it->count;
    updates += 2 * journal.size();
  }
  journal.clear();

  if (stats) {
    stats->suffix_hops = hops;
    stats->count_updates = updates;
    stats->max_journal = max_journal;
    stats->journal_within_bound = within_bound;
  }
  return marks;
}

MarkVector mark_hog_new(const OverlapTrie& t, MarkStats* stats, const MarkOptions& options) {
  FavStructure fav = precompute_fav(t);
  return mark_hog_new(t, fav, stats, options);
}

}  // namespace hog
