#pragma once

#include <cstdint>
#include <vector>

namespace hog {

// Segment tree over positions [0, size) counting positions not yet covered.
// Covering is monotone: a node whose count drops to zero shadows its whole
// subtree, which makes the zero the lazy tag and needs no push-down. Every
// write is journaled, so rollback() restores the state of the last
// checkpoint() in time proportional to the writes since.
class IntervalCoverTree {
 public:
  explicit IntervalCoverTree(std::uint32_t size);

  std::uint32_t size() const { return size_; }

  // Uncovered positions in [lo, hi], inclusive.
  std::uint32_t uncovered(std::uint32_t lo, std::uint32_t hi) const;
  void cover(std::uint32_t lo, std::uint32_t hi);

  void checkpoint();
  void rollback();

  std::uint64_t writes() const { return writes_; }
  std::uint64_t state_hash() const;

 private:
  std::uint32_t query(std::uint32_t node, std::uint32_t l, std::uint32_t r, std::uint32_t lo, std::uint32_t hi) const;
  void update(std::uint32_t node, std::uint32_t l, std::uint32_t r, std::uint32_t lo, std::uint32_t hi);
  void write(std::uint32_t node, std::uint32_t value);

  struct Undo {
    std::uint32_t node;
    std::uint32_t value;
  };

  std::uint32_t size_;
  std::vector<std::uint32_t> uncovered_;
  std::vector<Undo> journal_;
  std::uint64_t writes_ = 0;
};

}  // namespace hog
