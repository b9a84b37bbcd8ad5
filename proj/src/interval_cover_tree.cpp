#include "hog/interval_cover_tree.hpp"

#include "hog/string_set.hpp"

namespace hog {

IntervalCoverTree::IntervalCoverTree(std::uint32_t size) : size_(size), uncovered_(size == 0 ? 1 : 4 * std::size_t{size}, 0) {
  if (size == 0) return;
  // Fill leaf counts bottom-up with an explicit stack of (node, l, r, phase).
  struct Frame {
    std::uint32_t node, l, r;
    bool expanded;
  };
  std::vector<Frame> stack{{1, 0, size - 1, false}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.l == f.r) {
      uncovered_[f.node] = 1;
    } else if (!f.expanded) {
      const std::uint32_t mid = f.l + (f.r - f.l) / 2;
      stack.push_back({f.node, f.l, f.r, true});
      stack.push_back({2 * f.node, f.l, mid, false});
      stack.push_back({2 * f.node + 1, mid + 1, f.r, false});
    } else {
      uncovered_[f.node] = uncovered_[2 * f.node] + uncovered_[2 * f.node + 1];
    }
  }
}

std::uint32_t IntervalCoverTree::uncovered(std::uint32_t lo, std::uint32_t hi) const {
  if (lo > hi || hi >= size_) throw Error("interval out of range");
  return query(1, 0, size_ - 1, lo, hi);
}

void IntervalCoverTree::cover(std::uint32_t lo, std::uint32_t hi) {
  if (lo > hi || hi >= size_) throw Error("interval out of range");
  update(1, 0, size_ - 1, lo, hi);
}

std::uint32_t IntervalCoverTree::query(std::uint32_t node, std::uint32_t l, std::uint32_t r, std::uint32_t lo,
                                       std::uint32_t hi) const {
  if (uncovered_[node] == 0) return 0;
  if (lo <= l && r <= hi) return uncovered_[node];
  const std::uint32_t mid = l + (r - l) / 2;
  std::uint32_t total = 0;
  if (lo <= mid) total += query(2 * node, l, mid, lo, hi);
  if (hi > mid) total += query(2 * node + 1, mid + 1, r, lo, hi);
  return total;
}

void IntervalCoverTree::update(std::uint32_t node, std::uint32_t l, std::uint32_t r, std::uint32_t lo,
                               std::uint32_t hi) {
  if (uncovered_[node] == 0) return;
  if (lo <= l && r <= hi) {
    write(node, 0);
    return;
  }
  const std::uint32_t mid = l + (r - l) / 2;
  if (lo <= mid) update(2 * node, l, mid, lo, hi);
  if (hi > mid) update(2 * node + 1, mid + 1, r, lo, hi);
  // No ancestor of this node is zero, so both children's counts are current.
  write(node, uncovered_[2 * node] + uncovered_[2 * node + 1]);
}

void IntervalCoverTree::write(std::uint32_t node, std::uint32_t value) {
  if (uncovered_[node] == value) return;
  journal_.push_back({node, uncovered_[node]});
  uncovered_[node] = value;
  ++writes_;
}

void IntervalCoverTree::checkpoint() { journal_.clear(); }

void IntervalCoverTree::rollback() {
  while (!journal_.empty()) {
    const Undo u = journal_.back();
    journal_.pop_back();
    uncovered_[u.node] = u.value;
    ++writes_;
  }
}

std::uint64_t IntervalCoverTree::state_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t x : uncovered_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hog
