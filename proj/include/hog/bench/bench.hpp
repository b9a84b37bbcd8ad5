#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hog/marking.hpp"
#include "hog/overlap_trie.hpp"
#include "hog/string_set.hpp"

namespace hog::bench {

enum class Format { Lines, Fasta };

// A file (`format` applies), or "random:K:N" drawn over `alphabet` with `seed`.
struct DatasetSpec {
  std::string input;
  Format format = Format::Lines;
  std::optional<std::string> filter;
  std::string alphabet = "ACGT";
  std::uint64_t seed = 1;
};

struct Dataset {
  std::string id;
  std::uint64_t seed = 0;  // 0 for files
  StringSet strings;
};

Dataset load_dataset(const DatasetSpec& spec);
Dataset random_dataset(std::size_t k, std::uint64_t n, const std::string& alphabet, std::uint64_t seed);

struct RunOptions {
  int reps = 3;  // timed repetitions after one discarded warm-up run
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};  // per run; 0 disables
};

struct RunSample {
  double seconds = 0;
  std::uint64_t peak_bytes = 0;  // heap growth during the run
  MarkStats stats;
};

struct AlgoResult {
  Algorithm algo = Algorithm::New;
  bool timed_out = false;
  std::vector<RunSample> samples;

  double median_seconds() const;
  double mean_seconds() const;
  std::uint64_t median_peak_bytes() const;
};

// One dataset: structure sizes, T(E), and every algorithm's runs on the same
// prebuilt EHOG.
struct PointReport {
  std::string dataset;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::uint64_t n = 0;
  std::size_t nodes_act = 0;
  std::size_t nodes_ehog = 0;
  std::size_t nodes_hog = 0;
  double t_ehog_s = 0;
  double t_contract_s = 0;
  std::optional<std::uint64_t> peak_rss_bytes;
  std::vector<AlgoResult> algos;

  const AlgoResult* find(Algorithm a) const;
  // Fastest median among algorithms that finished.
  double fastest_median() const;
};

struct BenchReport {
  std::vector<PointReport> points;
};

class MarkMismatchError : public Error {
 public:
  MarkMismatchError(Algorithm a, Algorithm b, NodeId node, std::string node_string);
  NodeId node;
};

struct BuildResult {
  PointReport point;
  OverlapTrie hog;
};

// ACT -> EHOG -> HOG with one marker, phases timed separately.
BuildResult cmd_build(const Dataset& data, Algorithm algo, const RunOptions& options = {});

// Every algorithm on the same EHOG; throws MarkMismatchError if any two
// finished runs disagree.
PointReport cmd_compare(const Dataset& data, const std::vector<Algorithm>& algos, const RunOptions& options = {});

enum class SweepMode { FixNVaryK, FixKVaryN };

struct SweepSpec {
  SweepMode mode = SweepMode::FixNVaryK;
  std::uint64_t fixed = 1'000'000;   // n for FixNVaryK, k for FixKVaryN
  std::vector<std::uint64_t> grid;   // the varying parameter
  std::string alphabet = "ACGT";
  std::uint64_t seed = 1;
  std::vector<Algorithm> algos{std::begin(kPracticalAlgorithms), std::end(kPracticalAlgorithms)};
};

BenchReport cmd_sweep(const SweepSpec& spec, const RunOptions& options = {});

// dataset,k,n,nodes_act,nodes_ehog,nodes_hog,t_ehog_s,algo,t_mark_s,peak_bytes,
// suffix_hops,count_updates,seed,rep -- one row per repetition, then rows with
// rep=median and rep=mean.
inline constexpr const char* kCsvHeader =
    "dataset,k,n,nodes_act,nodes_ehog,nodes_hog,t_ehog_s,algo,t_mark_s,peak_bytes,suffix_hops,count_updates,seed,rep";
void write_csv(const BenchReport& report, std::ostream& out);

// Human-readable table with times relative to the per-row fastest ("1x").
void write_table(const BenchReport& report, std::ostream& out);

// Builds ACT/EHOG/HOG and checks structure invariants, containment
// V(H) <= V(E) <= V(A), equality of all markers on ACT and EHOG, and the
// brute-force oracle when the instance is small. Empty iff all hold.
std::vector<std::string> verify_dataset(const StringSet& p);

SweepMode parse_sweep_mode(const std::string& name);
std::string_view sweep_mode_name(SweepMode mode);

}  // namespace hog::bench
