#include "hog/bench/query_batch.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hog::bench {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error("query line " + std::to_string(line) + ": " + msg);
}

StringIndex to_index(std::uint64_t one_based, std::size_t k, std::size_t line) {
  if (one_based == 0 || one_based > k) fail(line, "string index " + std::to_string(one_based) + " out of range 1.." + std::to_string(k));
  return static_cast<StringIndex>(one_based - 1);
}

template <typename Range>
void print_list(std::ostream& out, const Range& values, std::uint64_t shift) {
  bool first = true;
  for (auto v : values) {
    if (!first) out << ' ';
    out << v + shift;
    first = false;
  }
  out << '\n';
}

}  // namespace

std::vector<Query> parse_batch(std::istream& in) {
  std::vector<Query> batch;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream words(text);
    std::string op;
    if (!(words >> op) || op[0] == '#') continue;
    if (op.size() != 1 || std::string_view("OARCT").find(op[0]) == std::string_view::npos)
      fail(line, "unknown query type '" + op + "'");
    Query q;
    q.type = static_cast<QueryType>(op[0]);
    q.line = line;
    const int want = q.type == QueryType::OneToAll ? 1 : 2;
    std::string arg;
    for (int i = 0; i < want; ++i) {
      if (!(words >> arg)) fail(line, "expected " + std::to_string(want) + " arguments");
      if (arg.find_first_not_of("0123456789") != std::string::npos) fail(line, "bad number '" + arg + "'");
      try {
        (i == 0 ? q.a : q.b) = std::stoull(arg);
      } catch (const std::out_of_range&) {
        fail(line, "number too large '" + arg + "'");
      }
    }
    if (words >> arg) fail(line, "trailing input '" + arg + "'");
    batch.push_back(q);
  }
  return batch;
}

std::vector<LatencyStats> run_batch(QueryEngine& engine, const std::vector<Query>& batch, std::ostream& answers) {
  const std::size_t k = engine.size();
  std::map<char, std::vector<double>> latency;
  for (const Query& q : batch) {
    const StringIndex i = to_index(q.a, k, q.line);
    if (q.type == QueryType::OneToOne) to_index(q.b, k, q.line);
    if (q.b > UINT32_MAX) fail(q.line, "parameter too large");
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out;
    switch (q.type) {
      case QueryType::OneToOne: {
        const Overlap ov = engine.one_to_one(i, static_cast<StringIndex>(q.b - 1));
        out << ov.length;
        if (ov.length) out << ' ' << ov.text;
        out << '\n';
        break;
      }
      case QueryType::OneToAll: print_list(out, engine.one_to_all(i), 0); break;
      case QueryType::Report: print_list(out, engine.report(i, static_cast<std::uint32_t>(q.b)), 1); break;
      case QueryType::Count: out << engine.count(i, static_cast<std::uint32_t>(q.b)) << '\n'; break;
      case QueryType::Top: print_list(out, engine.top(i, q.b), 1); break;
    }
    latency[static_cast<char>(q.type)].push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    answers << out.str();
  }

  std::vector<LatencyStats> stats;
  for (char c : std::string_view("OARCT")) {
    auto it = latency.find(c);
    if (it == latency.end()) continue;
    std::vector<double>& v = it->second;
    LatencyStats s{static_cast<QueryType>(c), v.size()};
    for (double x : v) s.mean_ms += x;
    s.mean_ms /= v.size();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    s.median_ms = v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
    stats.push_back(s);
  }
  return stats;
}

}  // namespace hog::bench
