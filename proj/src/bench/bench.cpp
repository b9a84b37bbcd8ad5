#include "hog/bench/bench.hpp"

#include <algorithm>
#include <charconv>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <thread>

#include "hog/baselines.hpp"
#include "hog/bench/alloc_counter.hpp"
#include "hog/ehog.hpp"

namespace hog::bench {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t parse_count(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string random_id(std::uint64_t k, std::uint64_t n) { return "random-k" + std::to_string(k) + "-n" + std::to_string(n); }

// Fires `stop` after `timeout` unless finished first. Everything allocating is
// set up before the measured run starts.
class Watchdog {
 public:
  Watchdog(std::stop_source& stop, std::chrono::milliseconds timeout) {
    if (timeout.count() <= 0) return;
    thread_ = std::jthread([this, &stop, timeout](std::stop_token done) {
      std::unique_lock lock(mutex_);
      if (!cv_.wait_for(lock, done, timeout, [] { return false; }) && !done.stop_requested()) stop.request_stop();
    });
  }

 private:
  std::mutex mutex_;
  std::condition_variable_any cv_;
  std::jthread thread_;
};

struct Run {
  RunSample sample;
  MarkVector marks;
};

std::optional<Run> timed_mark(Algorithm algo, const OverlapTrie& t, std::chrono::milliseconds timeout) {
  std::stop_source stop;
  Watchdog watchdog(stop, timeout);
  MarkOptions options;
  options.stop = stop.get_token();
  Run run;
  HeapPeakScope heap;
  const auto t0 = Clock::now();
  try {
    run.marks = mark_hog(algo, t, &run.sample.stats, options);
  } catch (const TimeoutError&) {
    return std::nullopt;
  }
  run.sample.seconds = seconds_since(t0);
  run.sample.peak_bytes = heap.bytes();
  return run;
}

// One discarded warm-up run, then options.reps timed runs. Returns the marks
// of the last run, or nothing on timeout.
std::optional<MarkVector> run_algorithm(Algorithm algo, const OverlapTrie& t, const RunOptions& options,
                                        AlgoResult& result) {
  result.algo = algo;
  std::optional<MarkVector> marks;
  for (int rep = 0; rep <= std::max(options.reps, 1); ++rep) {
    auto run = timed_mark(algo, t, options.timeout);
    if (!run) {
      result.timed_out = true;
      result.samples.clear();
      return std::nullopt;
    }
    if (rep > 0) result.samples.push_back(run->sample);
    marks = std::move(run->marks);
  }
  return marks;
}

template <typename T>
double median_of(std::vector<T> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? static_cast<double>(v[m]) : (static_cast<double>(v[m - 1]) + static_cast<double>(v[m])) / 2;
}

PointReport start_point(const Dataset& data) {
  PointReport point;
  point.dataset = data.id;
  point.seed = data.seed;
  point.k = data.strings.size();
  point.n = data.strings.total_length();
  return point;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

Dataset random_dataset(std::size_t k, std::uint64_t n, const std::string& alphabet, std::uint64_t seed) {
  return {random_id(k, n), seed, generate_random(k, n, make_byte_set(alphabet), seed)};
}

Dataset load_dataset(const DatasetSpec& spec) {
  constexpr std::string_view kRandom = "random:";
  if (spec.input.starts_with(kRandom)) {
    std::string_view rest = std::string_view(spec.input).substr(kRandom.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error("random dataset must be random:K:N");
    const std::uint64_t k = parse_count(rest.substr(0, colon), "k");
    const std::uint64_t n = parse_count(rest.substr(colon + 1), "n");
    return random_dataset(k, n, spec.alphabet, spec.seed);
  }
  Dataset data;
  data.id = std::filesystem::path(spec.input).filename().string();
  std::optional<ByteSet> filter;
  if (spec.filter) filter = make_byte_set(*spec.filter);
  if (spec.format == Format::Fasta) {
    data.strings = load_fasta(spec.input, filter);
  } else {
    if (filter) throw Error("--filter applies to fasta input only");
    data.strings = load_lines(spec.input);
  }
  return data;
}

double AlgoResult::median_seconds() const {
  std::vector<double> v;
  for (const auto& s : samples) v.push_back(s.seconds);
  return median_of(std::move(v));
}

double AlgoResult::mean_seconds() const {
  if (samples.empty()) return 0;
  double total = 0;
  for (const auto& s : samples) total += s.seconds;
  return total / samples.size();
}

std::uint64_t AlgoResult::median_peak_bytes() const {
  std::vector<std::uint64_t> v;
  for (const auto& s : samples) v.push_back(s.peak_bytes);
  return static_cast<std::uint64_t>(median_of(std::move(v)));
}

const AlgoResult* PointReport::find(Algorithm a) const {
  for (const auto& r : algos)
    if (r.algo == a) return &r;
  return nullptr;
}

double PointReport::fastest_median() const {
  double best = 0;
  bool any = false;
  for (const auto& r : algos) {
    if (r.timed_out) continue;
    const double m = r.median_seconds();
    if (!any || m < best) best = m;
    any = true;
  }
  return best;
}

MarkMismatchError::MarkMismatchError(Algorithm a, Algorithm b, NodeId node, std::string node_string)
    : Error("mark mismatch between " + std::string(algorithm_name(a)) + " and " + std::string(algorithm_name(b)) +
            " at node " + std::to_string(node) + " '" + node_string + "'"),
      node(node) {}

BuildResult cmd_build(const Dataset& data, Algorithm algo, const RunOptions& options) {
  PointReport point = start_point(data);
  EhogBuild e = build_ehog(data.strings);
  point.nodes_act = e.act_nodes;
  point.nodes_ehog = e.ehog.node_count();
  point.t_ehog_s = e.seconds;

  AlgoResult result;
  auto marks = run_algorithm(algo, e.ehog, options, result);
  if (!marks) throw Error(std::string(algorithm_name(algo)) + " timed out");
  point.algos.push_back(std::move(result));

  const auto t0 = Clock::now();
  OverlapTrie hog = contract(e.ehog, *marks, TrieKind::Hog);
  point.t_contract_s = seconds_since(t0);
  point.nodes_hog = hog.node_count();
  point.peak_rss_bytes = peak_rss_bytes();
  return {std::move(point), std::move(hog)};
}

PointReport cmd_compare(const Dataset& data, const std::vector<Algorithm>& algos, const RunOptions& options) {
  if (algos.size() < 2) throw Error("need >=2 algorithms to compare");
  PointReport point = start_point(data);
  EhogBuild e = build_ehog(data.strings);
  point.nodes_act = e.act_nodes;
  point.nodes_ehog = e.ehog.node_count();
  point.t_ehog_s = e.seconds;

  std::optional<MarkVector> reference;
  Algorithm reference_algo = algos.front();
  for (Algorithm a : algos) {
    AlgoResult result;
    auto marks = run_algorithm(a, e.ehog, options, result);
    point.algos.push_back(std::move(result));
    if (!marks) continue;
    if (!reference) {
      reference = std::move(marks);
      reference_algo = a;
      continue;
    }
    if (*marks != *reference) {
      NodeId v = 0;
      while ((*marks)[v] == (*reference)[v]) ++v;
      throw MarkMismatchError(reference_algo, a, v, std::string(e.ehog.spell(v)));
    }
  }
  if (reference) point.nodes_hog = reference->count();
  point.peak_rss_bytes = peak_rss_bytes();
  return point;
}

SweepMode parse_sweep_mode(const std::string& name) {
  if (name == "fix_n_vary_k") return SweepMode::FixNVaryK;
  if (name == "fix_k_vary_n") return SweepMode::FixKVaryN;
  throw Error("unknown sweep mode '" + name + "'");
}

std::string_view sweep_mode_name(SweepMode mode) {
  return mode == SweepMode::FixNVaryK ? "fix_n_vary_k" : "fix_k_vary_n";
}

BenchReport cmd_sweep(const SweepSpec& spec, const RunOptions& options) {
  if (spec.grid.empty()) throw Error("empty sweep grid");
  if (spec.fixed == 0) throw Error("fixed sweep parameter must be positive");
  BenchReport report;
  for (std::uint64_t value : spec.grid) {
    const std::uint64_t k = spec.mode == SweepMode::FixNVaryK ? value : spec.fixed;
    const std::uint64_t n = spec.mode == SweepMode::FixNVaryK ? spec.fixed : value;
    Dataset data = random_dataset(k, n, spec.alphabet, spec.seed);
    report.points.push_back(spec.algos.size() >= 2 ? cmd_compare(data, spec.algos, options)
                                                   : cmd_build(data, spec.algos.at(0), options).point);
    const PointReport& p = report.points.back();
    if (p.nodes_hog > p.nodes_ehog || p.nodes_ehog > p.nodes_act)
      throw Error("size invariant violated at " + p.dataset);
  }
  return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const PointReport& p : report.points) {
    const std::string prefix = p.dataset + ',' + std::to_string(p.k) + ',' + std::to_string(p.n) + ',' +
                               std::to_string(p.nodes_act) + ',' + std::to_string(p.nodes_ehog) + ',' +
                               std::to_string(p.nodes_hog) + ',' + fmt_seconds(p.t_ehog_s) + ',';
    for (const AlgoResult& r : p.algos) {
      const std::string name(algorithm_name(r.algo));
      if (r.timed_out) {
        out << prefix << name << ",timeout,,,," << p.seed << ",timeout\n";
        continue;
      }
      auto row = [&](double secs, std::uint64_t bytes, const MarkStats& s, const std::string& rep) {
        out << prefix << name << ',' << fmt_seconds(secs) << ',' << bytes << ',' << s.suffix_hops << ','
            << s.count_updates << ',' << p.seed << ',' << rep << '\n';
      };
      for (std::size_t i = 0; i < r.samples.size(); ++i)
        row(r.samples[i].seconds, r.samples[i].peak_bytes, r.samples[i].stats, std::to_string(i + 1));
      if (r.samples.empty()) continue;
      std::uint64_t total_bytes = 0;
      for (const auto& s : r.samples) total_bytes += s.peak_bytes;
      row(r.median_seconds(), r.median_peak_bytes(), r.samples.front().stats, "median");
      row(r.mean_seconds(), total_bytes / r.samples.size(), r.samples.front().stats, "mean");
    }
  }
}

void write_table(const BenchReport& report, std::ostream& out) {
  char line[256];
  for (const PointReport& p : report.points) {
    std::snprintf(line, sizeof line, "%s  k=%zu n=%llu  |A|=%zu |E|=%zu |H|=%zu  T(E)=%ss\n", p.dataset.c_str(), p.k,
                  static_cast<unsigned long long>(p.n), p.nodes_act, p.nodes_ehog, p.nodes_hog,
                  fmt_seconds(p.t_ehog_s).c_str());
    out << line;
    const double fastest = p.fastest_median();
    for (const AlgoResult& r : p.algos) {
      const std::string name(algorithm_name(r.algo));
      if (r.timed_out) {
        std::snprintf(line, sizeof line, "  %-8s timed out\n", name.c_str());
      } else {
        const double m = r.median_seconds();
        const double rel = fastest > 0 ? m / fastest : 1.0;
        std::snprintf(line, sizeof line, "  %-8s median %ss  mean %ss  %6.2fx  peak %llu B  hops %llu  updates %llu\n",
                      name.c_str(), fmt_seconds(m).c_str(), fmt_seconds(r.mean_seconds()).c_str(), rel,
                      static_cast<unsigned long long>(r.median_peak_bytes()),
                      static_cast<unsigned long long>(r.samples.front().stats.suffix_hops),
                      static_cast<unsigned long long>(r.samples.front().stats.count_updates));
      }
      out << line;
    }
    if (p.peak_rss_bytes) out << "  peak rss " << *p.peak_rss_bytes << " B\n";
  }
}

std::vector<std::string> verify_dataset(const StringSet& p) {
  std::vector<std::string> problems;
  auto check = [&](const OverlapTrie& t, const std::string& what) {
    for (auto& msg : verify_structure(t)) problems.push_back(what + ": " + msg);
  };
  auto as_set = [](const OverlapTrie& t) {
    auto v = node_strings(t);
    return std::set<std::string>(v.begin(), v.end());
  };

  OverlapTrie act = build_act(p);
  check(act, "act");
  OverlapTrie ehog = contract(act, mark_ehog(act), TrieKind::Ehog);
  check(ehog, "ehog");

  // Keep the oracle to instances where the quadratic pair scan is cheap.
  const bool small = static_cast<double>(p.size()) * static_cast<double>(p.total_length()) <= 5e7;
  std::vector<Algorithm> algos(std::begin(kPracticalAlgorithms), std::end(kPracticalAlgorithms));
  if (small) algos.push_back(Algorithm::Oracle);

  std::optional<MarkVector> on_act, on_ehog;
  for (Algorithm a : algos) {
    const std::string name(algorithm_name(a));
    MarkVector m_act = mark_hog(a, act, nullptr);
    MarkVector m_ehog = mark_hog(a, ehog, nullptr);
    if (!on_act) {
      on_act = std::move(m_act);
      on_ehog = std::move(m_ehog);
      continue;
    }
    if (m_act != *on_act) problems.push_back(name + " disagrees with " + std::string(algorithm_name(algos[0])) + " on act");
    if (m_ehog != *on_ehog) problems.push_back(name + " disagrees with " + std::string(algorithm_name(algos[0])) + " on ehog");
  }

  OverlapTrie hog = contract(ehog, *on_ehog, TrieKind::Hog);
  check(hog, "hog");
  OverlapTrie hog_from_act = contract(act, *on_act, TrieKind::Hog);
  const auto a_set = as_set(act), e_set = as_set(ehog), h_set = as_set(hog);
  if (as_set(hog_from_act) != h_set) problems.push_back("hog built from act and from ehog differ");
  if (!std::includes(a_set.begin(), a_set.end(), e_set.begin(), e_set.end()))
    problems.push_back("containment violated: V(E) not within V(A)");
  if (!std::includes(e_set.begin(), e_set.end(), h_set.begin(), h_set.end()))
    problems.push_back("containment violated: V(H) not within V(E)");
  if (small) {
    std::set<std::string> expected = brute_force_ov(p);
    expected.insert("");
    for (auto& s : p.strings()) expected.insert(s);
    if (expected != h_set) problems.push_back("hog nodes differ from brute-force overlaps");
  }
  return problems;
}

}  // namespace hog::bench
