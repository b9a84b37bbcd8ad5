#include "hog/ehog.hpp"

#include <chrono>

namespace hog {

MarkVector mark_ehog(const OverlapTrie& act, std::uint64_t* hops) {
  if (act.kind != TrieKind::Act) throw Error("mark_ehog expects an ACT");
  MarkVector marks = base_marks(act);
  std::vector<std::uint8_t> walked(act.node_count(), 0);
  std::uint64_t count = 0;
  for (NodeId leaf : act.leaf_of) {
    // A walked node had its whole suffix chain walked already.
    for (NodeId v = leaf; v != kRoot && !walked[v]; v = act.suffix_link[v]) {
      walked[v] = 1;
      marks.set(v);
      ++count;
    }
  }
  if (hops) *hops = count;
  return marks;
}

EhogBuild build_ehog(const StringSet& p) {
  const auto t0 = std::chrono::steady_clock::now();
  EhogBuild out;
  OverlapTrie act = build_act(p);
  out.act_nodes = act.node_count();
  MarkVector marks = mark_ehog(act, &out.suffix_hops);
  out.ehog = contract(act, marks, TrieKind::Ehog);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace hog
