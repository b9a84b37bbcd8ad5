// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hog/baselines.hpp"
#include "hog/bench/bench.hpp"
#include "hog/ehog.hpp"
#include "hog/query_engine.hpp"
#include "oracle.hpp"

using namespace hog;
using namespace hog::bench;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::set<std::string> as_set(const OverlapTrie& t) {
  auto v = node_strings(t);
  return {v.begin(), v.end()};
}

// V(H) <= V(E) <= V(A) on node strings, without copying them.
bool contained(const OverlapTrie& inner, const OverlapTrie& outer) {
  std::unordered_set<std::string_view> have;
  have.reserve(outer.node_count() * 2);
  for (NodeId v = 0; v < outer.node_count(); ++v) have.insert(outer.spell(v));
  for (NodeId v = 0; v < inner.node_count(); ++v)
    if (!have.count(inner.spell(v))) return false;
  return true;
}

Verdict containment;  // criterion 4, fed by every instance built below
std::size_t containment_instances = 0;

void check_containment(const OverlapTrie& act, const OverlapTrie& ehog, const OverlapTrie& hog) {
  ++containment_instances;
  if (!contained(ehog, act)) containment.fail("V(E) not within V(A) on instance " + std::to_string(containment_instances));
  if (!contained(hog, ehog)) containment.fail("V(H) not within V(E) on instance " + std::to_string(containment_instances));
}

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

// Criteria 1, 2 and 7 share the random instances.
void random_instances(Verdict& oracle_eq, Verdict& bit_eq, Verdict& queries) {
  std::mt19937_64 rng(2024);
  const char* alphabets[] = {"a", "ab", "ACGT"};
  constexpr int kInstances = 1200;
  for (int round = 0; round < kInstances; ++round) {
    auto raw = oracle::random_instance(rng, 40, 25, alphabets[round % 3]);
    const auto sorted = oracle::dedup_sorted(raw);
    const std::string tag = "instance " + std::to_string(round);
    StringSet p = normalize(raw);
    OverlapTrie act = build_act(p);
    OverlapTrie ehog = contract(act, mark_ehog(act), TrieKind::Ehog);
    const auto expected = oracle::hog_nodes(sorted);

    std::optional<MarkVector> ref_act, ref_ehog;
    for (Algorithm a : kPracticalAlgorithms) {
      const std::string who = tag + " " + std::string(algorithm_name(a));
      MarkVector on_act = mark_hog(a, act);
      MarkVector on_ehog = mark_hog(a, ehog);
      OverlapTrie hog = contract(ehog, on_ehog, TrieKind::Hog);
      if (as_set(hog) != expected) oracle_eq.fail(who + ": HOG nodes differ from brute force");
      if (node_strings(contract(act, on_act, TrieKind::Hog)) != node_strings(hog))
        bit_eq.fail(who + ": HOG from ACT differs from HOG from EHOG");
      if (!ref_act) {
        ref_act = on_act;
        ref_ehog = on_ehog;
      } else {
        if (on_act != *ref_act) bit_eq.fail(who + ": marks on ACT differ from new");
        if (on_ehog != *ref_ehog) bit_eq.fail(who + ": marks on EHOG differ from new");
      }
    }

    OverlapTrie hog = contract(ehog, *ref_ehog, TrieKind::Hog);
    check_containment(act, ehog, hog);

    QueryEngine q(hog, p);
    const std::size_t k = raw.size();
    for (StringIndex i = 0; i < k; ++i) {
      std::vector<std::uint32_t> want(k);
      for (StringIndex j = 0; j < k; ++j) want[j] = static_cast<std::uint32_t>(oracle::ov(raw[i], raw[j]));
      if (q.one_to_all(i) != want) queries.fail(tag + ": one_to_all");
      for (StringIndex j = 0; j < k; ++j) {
        const Overlap o = q.one_to_one(i, j);
        if (o.length != want[j] || o.text != std::string_view(raw[j]).substr(0, want[j]))
          queries.fail(tag + ": one_to_one");
      }
      for (std::uint32_t l = 0; l <= 4; ++l) {
        std::vector<StringIndex> rep;
        for (StringIndex j = 0; j < k; ++j)
          if (want[j] >= l) rep.push_back(j);
        if (q.report(i, l) != rep) queries.fail(tag + ": report");
        if (q.count(i, l) != rep.size()) queries.fail(tag + ": count");
      }
      for (std::size_t c : {std::size_t{1}, std::size_t{2}, k / 2, k, k + 1}) {
        auto got = q.top(i, c);
        std::vector<std::uint32_t> got_len, best = want;
        for (StringIndex j : got) got_len.push_back(want[j]);
        std::sort(got_len.rbegin(), got_len.rend());
        std::sort(best.rbegin(), best.rend());
        best.resize(std::min(c, k));
        if (got_len != best || std::set<StringIndex>(got.begin(), got.end()).size() != got.size())
          queries.fail(tag + ": top");
      }
    }
  }
  const std::string summary = std::to_string(kInstances) + " instances";
  if (oracle_eq.pass) oracle_eq.detail = summary;
  if (bit_eq.pass) bit_eq.detail = summary + ", ACT and EHOG";
  if (queries.pass) queries.detail = summary + ", all five query types";
}

Verdict fig1_golden() {
  Verdict v;
  const std::vector<std::string> raw{"aabaa", "aadbd", "dbdaa"};
  StringSet p = normalize(raw);
  OverlapTrie act = build_act(p);
  OverlapTrie ehog = contract(act, mark_ehog(act), TrieKind::Ehog);
  const std::set<std::string> e_want{"", "a", "aa", "d", "dbd", "aabaa", "aadbd", "dbdaa"};
  const std::set<std::string> h_want{"", "aa", "dbd", "aabaa", "aadbd", "dbdaa"};
  if (act.node_count() != 14 || as_set(act) != oracle::prefixes(raw)) v.fail("ACT differs");
  if (ehog.node_count() != 8 || as_set(ehog) != e_want) v.fail("EHOG differs");
  for (Algorithm a : kPracticalAlgorithms) {
    OverlapTrie hog = contract(ehog, mark_hog(a, ehog), TrieKind::Hog);
    if (hog.node_count() != 6 || as_set(hog) != h_want) v.fail(std::string(algorithm_name(a)) + ": HOG differs");
    check_containment(act, ehog, hog);
  }
  if (v.pass) v.detail = "|A|=14 |E|=8 |H|=6 with the expected node strings";
  return v;
}

// Builds ACT, EHOG and (with `new`) HOG of a dataset, checking containment.
struct Structures {
  OverlapTrie act, ehog, hog;
};

Structures build_all(const StringSet& p) {
  Structures s;
  s.act = build_act(p);
  s.ehog = contract(s.act, mark_ehog(s.act), TrieKind::Ehog);
  s.hog = contract(s.ehog, mark_hog(Algorithm::New, s.ehog), TrieKind::Hog);
  check_containment(s.act, s.ehog, s.hog);
  return s;
}

Verdict linearity() {
  Verdict v;
  std::vector<double> t;
  std::vector<std::size_t> e_size;
  std::string detail;
  for (std::uint64_t n : {10'000ULL, 100'000ULL, 1'000'000ULL}) {
    StringSet p = generate_random(n / 100, n, make_byte_set("ACGT"), 17);
    Structures s = build_all(p);
    MarkStats stats;
    mark_hog(Algorithm::New, s.ehog, &stats);
    if (stats.count_updates > 6 * n) v.fail("count_updates " + std::to_string(stats.count_updates) + " > 6n at n=" + std::to_string(n));
    if (stats.suffix_hops > n) v.fail("suffix_hops " + std::to_string(stats.suffix_hops) + " > n at n=" + std::to_string(n));
    std::vector<double> reps;
    for (int r = 0; r < 9; ++r) reps.push_back(seconds([&] { mark_hog(Algorithm::New, s.ehog); }));
    t.push_back(median(reps));
    e_size.push_back(s.ehog.node_count());
    detail += "n=" + std::to_string(n) + ": updates/n=" + fmt("%.2f", double(stats.count_updates) / n) +
              " hops/n=" + fmt("%.2f", double(stats.suffix_hops) / n) + " |E|=" + std::to_string(s.ehog.node_count()) +
              " t=" + fmt("%.2e", t.back()) + "s; ";
  }
  // Per-|E| cost may grow by at most 2.5x per decade.
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double ratio = (t[i] / e_size[i]) / (t[i - 1] / e_size[i - 1]);
    detail += "per-|E| growth " + fmt("%.2f", ratio) + "x; ";
    if (ratio > 2.5) v.fail("time per EHOG node grew " + fmt("%.2f", ratio) + "x in one decade");
  }
  if (v.pass) v.detail = detail;
  else v.detail += " [" + detail + "]";
  return v;
}

Verdict ordering() {
  Verdict v;
  for (std::uint64_t n : {1'000'000ULL, 4'000'000ULL}) {
    Dataset d = random_dataset(10'000, n, "ACGT", 31);
    Structures s = build_all(d.strings);
    RunOptions options;
    options.reps = 7;
    PointReport p = cmd_compare(d, {std::begin(kPracticalAlgorithms), std::end(kPracticalAlgorithms)}, options);
    auto med = [&](Algorithm a) { return p.find(a)->median_seconds(); };
    const double tn = med(Algorithm::New), tk = med(Algorithm::Khan), tp = med(Algorithm::ParkCpr),
                 tc = med(Algorithm::Cazaux);
    v = {};
    v.detail = "n=" + std::to_string(n) + " medians new " + fmt("%.2e", tn) + " khan " + fmt("%.2e", tk) +
               " parkcpr " + fmt("%.2e", tp) + " cazaux " + fmt("%.2e", tc) + " s";
    const bool ok = tk >= 1.2 * tn && tp >= 1.2 * tk && tc >= 1.2 * std::max({tn, tk, tp});
    if (ok) return v;
    v.pass = false;
  }
  return v;
}

Verdict query_latency() {
  Verdict v;
  Dataset d = random_dataset(10'000, 1'000'000, "ACGT", 47);
  Structures s = build_all(d.strings);
  QueryEngine q(s.hog, d.strings);
  const std::uint64_t hash = q.state_hash();
  std::mt19937_64 rng(5);
  const std::size_t k = q.size();
  std::vector<double> one, all;
  std::uint64_t sink = 0;
  for (int r = 0; r < 2000; ++r) {
    const StringIndex i = rng() % k, j = rng() % k;
    one.push_back(seconds([&] { sink += q.one_to_one(i, j).length; }));
  }
  for (int r = 0; r < 200; ++r) {
    const StringIndex i = rng() % k;
    all.push_back(seconds([&] { sink += q.one_to_all(i)[0]; }));
  }
  for (int r = 0; r < 10'000; ++r) {
    const StringIndex i = rng() % k;
    switch (r % 5) {
      case 0: sink += q.one_to_one(i, rng() % k).length; break;
      case 1: sink += q.one_to_all(i).size(); break;
      case 2: sink += q.report(i, rng() % 8).size(); break;
      case 3: sink += q.count(i, rng() % 8); break;
      case 4: sink += q.top(i, 1 + rng() % 50).size(); break;
    }
  }
  const double m1 = median(one) * 1e3, ma = median(all) * 1e3;
  v.detail = "median one_to_one " + fmt("%.4f", m1) + " ms, one_to_all " + fmt("%.3f", ma) + " ms";
  if (m1 >= 1.0) v.fail(v.detail);
  if (ma >= 50.0) v.fail(v.detail);
  if (q.state_hash() != hash) v.fail("engine state changed after 10^4 mixed queries");
  return v;
}

std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = (i + j) / 2.0 + 1;
    i = j + 1;
  }
  return r;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ma += ra[i] / n, mb += rb[i] / n;
  double num = 0, da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  return da == 0 || db == 0 ? 0 : num / std::sqrt(da * db);
}

SweepSpec shape_sweep() {
  SweepSpec spec;
  spec.mode = SweepMode::FixNVaryK;
  spec.fixed = 1'000'000;
  spec.grid = {100, 1'000, 10'000, 100'000};
  spec.seed = 3;
  return spec;
}

Verdict ehog_shape(const BenchReport& report) {
  Verdict v;
  std::vector<double> e, t;
  std::string sizes;
  for (const PointReport& p : report.points) {
    e.push_back(static_cast<double>(p.nodes_ehog));
    t.push_back(p.find(Algorithm::New)->median_seconds());
    sizes += (sizes.empty() ? "" : ",") + std::to_string(p.nodes_ehog);
    if (p.nodes_hog > p.nodes_ehog || p.nodes_ehog > p.nodes_act) v.fail("size order violated at " + p.dataset);
  }
  const auto peak = std::max_element(e.begin(), e.end()) - e.begin();
  const bool rises_then_falls = peak > 0 && peak + 1 < static_cast<long>(e.size()) &&
                                std::is_sorted(e.begin(), e.begin() + peak + 1) &&
                                std::is_sorted(e.rbegin(), e.rend() - peak);
  const double rho = spearman(t, e);
  v.detail = "|E| over k=1e2..1e5: " + sizes + "; Spearman(t_new, |E|) = " + fmt("%.2f", rho);
  if (!rises_then_falls) v.fail(v.detail + " (|E| does not rise then fall)");
  if (rho < 0.8) v.fail(v.detail);
  return v;
}

std::string strip_measurements(const BenchReport& report) {
  std::ostringstream csv;
  write_csv(report, csv);
  std::istringstream in(csv.str());
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    // t_ehog_s, t_mark_s, peak_bytes
    for (std::size_t c : {6u, 8u, 9u})
      if (c < cells.size()) cells[c].clear();
    for (const auto& c : cells) out += c + ',';
    out += '\n';
  }
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Verdict>> results(10);
  results[0].first = "oracle equivalence of all markers";
  results[1].first = "cross-algorithm bit equality";
  results[2].first = "three-string golden instance";
  results[3].first = "containment V(H) <= V(E) <= V(A)";
  results[4].first = "linearity of new";
  results[5].first = "performance ordering new < khan < parkcpr < cazaux";
  results[6].first = "query oracle equivalence";
  results[7].first = "query latency and engine state";
  results[8].first = "EHOG size shape over k";
  results[9].first = "sweep determinism";

  auto timed = [](const char* what, auto&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    std::fprintf(stderr, "[%s: %.1fs]\n", what,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };

  timed("random instances", [&] { random_instances(results[0].second, results[1].second, results[6].second); });
  timed("golden", [&] { results[2].second = fig1_golden(); });
  timed("linearity", [&] { results[4].second = linearity(); });
  timed("ordering", [&] { results[5].second = ordering(); });
  timed("latency", [&] { results[7].second = query_latency(); });
  timed("sweeps", [&] {
    RunOptions options;
    options.reps = 5;
    const SweepSpec spec = shape_sweep();
    BenchReport first = cmd_sweep(spec, options);
    BenchReport second = cmd_sweep(spec, options);
    results[8].second = ehog_shape(first);
    Verdict& det = results[9].second;
    if (strip_measurements(first) != strip_measurements(second)) det.fail("CSV differs outside timing/memory columns");
    else det.detail = "two seeded runs of fix_n_vary_k agree on " + std::to_string(first.points.size()) + " points";
    for (const PointReport& p : first.points) {
      DatasetSpec d;
      d.input = "random:" + std::to_string(p.k) + ":" + std::to_string(p.n);
      d.seed = spec.seed;
      build_all(load_dataset(d).strings);
    }
  });

  results[3].second = containment;
  if (containment.pass) results[3].second.detail = std::to_string(containment_instances) + " instances";

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, v] = results[i];
    std::printf("%s criterion %zu: %s -- %s\n", v.pass ? "PASS" : "FAIL", i + 1, name.c_str(), v.detail.c_str());
    failed += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
