#pragma once

#include <cstdint>
#include <optional>

namespace hog::bench {

// Heap accounting through replaced global operator new/delete. Linking
// hog_bench installs the hook for the whole program.
std::uint64_t live_heap_bytes();
std::uint64_t peak_heap_bytes();
void reset_heap_peak();

// Process-wide peak resident set size reported by the OS, if available.
std::optional<std::uint64_t> peak_rss_bytes();

// Peak heap growth between construction and bytes().
class HeapPeakScope {
 public:
  HeapPeakScope() : base_(live_heap_bytes()) { reset_heap_peak(); }
  std::uint64_t bytes() const {
    const std::uint64_t peak = peak_heap_bytes();
    return peak > base_ ? peak - base_ : 0;
  }

 private:
  std::uint64_t base_;
};

}  // namespace hog::bench
