#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hog/query_engine.hpp"

namespace hog::bench {

enum class QueryType : char { OneToOne = 'O', OneToAll = 'A', Report = 'R', Count = 'C', Top = 'T' };

// One batch line; indices are 1-based as written in the file.
struct Query {
  QueryType type = QueryType::OneToOne;
  std::uint64_t a = 0;
  std::uint64_t b = 0;  // j, l or c; unused for A
  std::size_t line = 0;
};

// `O i j` | `A i` | `R i l` | `C i l` | `T i c`, one per line. Blank lines and
// lines starting with '#' are skipped. Throws with the line number on a
// malformed line.
std::vector<Query> parse_batch(std::istream& in);

struct LatencyStats {
  QueryType type;
  std::size_t queries = 0;
  double median_ms = 0;
  double mean_ms = 0;
};

// Prints one answer line per query to `answers`; returns latency per query
// type present in the batch, in O A R C T order.
//   O: "<length> <overlap>"     A: lengths for j = 1..k
//   R: matching j ascending     C: the count     T: j in walk order
std::vector<LatencyStats> run_batch(QueryEngine& engine, const std::vector<Query>& batch, std::ostream& answers);

}  // namespace hog::bench
