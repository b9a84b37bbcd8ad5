#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string_view>
#include <vector>

#include "hog/overlap_trie.hpp"

namespace hog {

enum class Algorithm { Cazaux, ParkCpr, Khan, New, Oracle };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// The four practical markers, in the order the benchmark reports them.
inline constexpr Algorithm kPracticalAlgorithms[] = {Algorithm::New, Algorithm::Khan, Algorithm::ParkCpr,
                                                    Algorithm::Cazaux};

// Operation counters of one marking run.
//   suffix_hops    suffix links followed
//   count_updates  writes to the algorithm's working state: count[] writes
//                  including restores (new), segment tree writes (parkcpr),
//                  stack pushes (khan), found[] stamps (cazaux)
struct MarkStats {
  std::uint64_t suffix_hops = 0;
  std::uint64_t count_updates = 0;
  std::uint64_t max_journal = 0;        // longest V_m of one pass (new)
  bool journal_within_bound = true;     // every |V_m| <= 3|p_i| (new)
};

struct MarkOptions {
  std::stop_token stop;
  // Per-pass consistency checks (new): counts restored, blackening monotone.
  // O(nodes) per string; for tests only.
  bool audit = false;
};

class TimeoutError : public Error {
 public:
  TimeoutError() : Error("marking timed out") {}
};

// Marks root, P and Ov(P) on an ACT or EHOG.
MarkVector mark_hog(Algorithm a, const OverlapTrie& t, MarkStats* stats = nullptr, const MarkOptions& options = {});

void require_markable(const OverlapTrie& t, std::string_view who);

}  // namespace hog
