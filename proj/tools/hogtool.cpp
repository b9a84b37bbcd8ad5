// hogtool: build, compare, benchmark and query hierarchical overlap graphs.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "hog/bench/bench.hpp"
#include "hog/bench/query_batch.hpp"

namespace {

using namespace hog;
using namespace hog::bench;

struct DatasetFlags {
  DatasetSpec spec;
  std::string format = "lines";
  std::string filter;

  void add(CLI::App* app) {
    app->add_option("-i,--input", spec.input, "Dataset file, or random:K:N")->required();
    app->add_option("--format", format, "Input format")->check(CLI::IsMember({"lines", "fasta"}));
    app->add_option("--alphabet", spec.alphabet, "Symbols for random:K:N datasets");
    app->add_option("--filter", filter, "Drop FASTA records with a byte outside this set");
    app->add_option("--seed", spec.seed, "Seed for random:K:N datasets");
  }

  Dataset load() {
    spec.format = format == "fasta" ? Format::Fasta : Format::Lines;
    if (!filter.empty()) spec.filter = filter;
    return load_dataset(spec);
  }
};

struct RunFlags {
  int reps = 3;
  double timeout_s = 600;

  void add(CLI::App* app) {
    app->add_option("--reps", reps, "Timed repetitions after a discarded warm-up")->check(CLI::Range(1, 1000));
    app->add_option("--timeout", timeout_s, "Per-run marking timeout in seconds, 0 for none")->check(CLI::NonNegativeNumber);
  }

  RunOptions options() const {
    RunOptions o;
    o.reps = reps;
    o.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(timeout_s * 1000)));
    return o;
  }
};

Algorithm to_algorithm(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw Error("unknown algorithm '" + name + "'");
  return *a;
}

std::vector<Algorithm> to_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const auto& n : names) out.push_back(to_algorithm(n));
  return out;
}

void emit(const BenchReport& report, const std::string& csv_path) {
  write_table(report, std::cout);
  if (csv_path.empty()) return;
  std::ofstream out(csv_path);
  if (!out) throw Error("cannot write " + csv_path);
  write_csv(report, out);
}

const char* type_name(QueryType t) {
  switch (t) {
    case QueryType::OneToOne: return "one_to_one";
    case QueryType::OneToAll: return "one_to_all";
    case QueryType::Report: return "report";
    case QueryType::Count: return "count";
    case QueryType::Top: return "top";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical overlap graph toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> practical{"new", "khan", "parkcpr", "cazaux"};
  const auto known_algos = CLI::IsMember({"new", "khan", "parkcpr", "cazaux", "oracle"});

  DatasetFlags data;
  RunFlags run;
  std::string algo = "new";
  std::vector<std::string> algos = practical;
  std::string csv_path, serialize_path, batch_path, out_path;

  auto* build = app.add_subcommand("build", "Build ACT, EHOG and HOG with one marking algorithm");
  data.add(build);
  run.add(build);
  build->add_option("--algo", algo, "Marking algorithm")->check(known_algos);
  build->add_option("--csv", csv_path, "Write CSV rows here");
  build->add_option("--serialize", serialize_path, "Write the HOG here");

  auto* compare = app.add_subcommand("compare", "Run several markers on the same EHOG");
  data.add(compare);
  run.add(compare);
  compare->add_option("--algo", algos, "Marking algorithms (comma separated)")->delimiter(',')->check(known_algos);
  compare->add_option("--csv", csv_path, "Write CSV rows here");

  SweepSpec sweep_spec;
  std::string mode = "fix_n_vary_k";
  std::uint64_t fixed_n = 1'000'000, fixed_k = 100'000;
  auto* sweep = app.add_subcommand("sweep", "Benchmark random datasets over a parameter grid");
  run.add(sweep);
  sweep->add_option("--mode", mode, "fix_n_vary_k or fix_k_vary_n")->check(CLI::IsMember({"fix_n_vary_k", "fix_k_vary_n"}));
  sweep->add_option("--grid", sweep_spec.grid, "Values of the varying parameter (comma separated)")
      ->delimiter(',')
      ->required();
  sweep->add_option("--n", fixed_n, "Total length when varying k");
  sweep->add_option("--k", fixed_k, "String count when varying n");
  sweep->add_option("--alphabet", sweep_spec.alphabet, "Symbols to draw from");
  sweep->add_option("--seed", sweep_spec.seed, "Generator seed");
  sweep->add_option("--algo", algos, "Marking algorithms (comma separated)")->delimiter(',')->check(known_algos);
  sweep->add_option("--csv", csv_path, "Write CSV rows here");

  auto* query = app.add_subcommand("query", "Answer a batch of overlap queries on the HOG");
  data.add(query);
  query->add_option("--batch", batch_path, "Query file")->required()->check(CLI::ExistingFile);
  query->add_option("--algo", algo, "Marking algorithm used to build the HOG")->check(known_algos);

  auto* verify = app.add_subcommand("verify", "Check structures, containment and marker agreement");
  data.add(verify);

  auto* generate = app.add_subcommand("generate", "Write a dataset one string per line");
  data.add(generate);
  generate->add_option("-o,--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      BuildResult r = cmd_build(data.load(), to_algorithm(algo), run.options());
      emit(BenchReport{{r.point}}, csv_path);
      if (!serialize_path.empty()) {
        std::ofstream out(serialize_path);
        if (!out) throw Error("cannot write " + serialize_path);
        serialize(r.hog, out);
        std::cout << "wrote HOG with " << r.hog.node_count() << " nodes to " << serialize_path << '\n';
      }
    } else if (compare->parsed()) {
      emit(BenchReport{{cmd_compare(data.load(), to_algorithms(algos), run.options())}}, csv_path);
    } else if (sweep->parsed()) {
      sweep_spec.mode = parse_sweep_mode(mode);
      sweep_spec.fixed = sweep_spec.mode == SweepMode::FixNVaryK ? fixed_n : fixed_k;
      sweep_spec.algos = to_algorithms(algos);
      emit(cmd_sweep(sweep_spec, run.options()), csv_path);
    } else if (query->parsed()) {
      Dataset d = data.load();
      std::ifstream in(batch_path);
      auto batch = parse_batch(in);
      RunOptions once;
      once.reps = 1;
      once.timeout = std::chrono::milliseconds(0);
      BuildResult r = cmd_build(d, to_algorithm(algo), once);
      QueryEngine engine(r.hog, d.strings);
      for (const LatencyStats& s : run_batch(engine, batch, std::cout))
        std::cerr << type_name(s.type) << ": " << s.queries << " queries, median " << s.median_ms << " ms, mean "
                  << s.mean_ms << " ms\n";
    } else if (verify->parsed()) {
      Dataset d = data.load();
      auto problems = verify_dataset(d.strings);
      for (const auto& p : problems) std::cout << "FAIL " << p << '\n';
      if (!problems.empty()) return 1;
      std::cout << "verify ok: " << d.id << " k=" << d.strings.size() << " n=" << d.strings.total_length() << '\n';
    } else if (generate->parsed()) {
      Dataset d = data.load();
      if (out_path.empty()) {
        write_lines(d.strings, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        write_lines(d.strings, out);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
