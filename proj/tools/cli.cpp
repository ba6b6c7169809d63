#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "sphere_laman/count.hpp"
#include "sphere_laman/generator.hpp"
#include "sphere_laman/graph.hpp"
#include "sphere_laman/report.hpp"
#include "sphere_laman/verify.hpp"

namespace sl = sphere_laman;

namespace {

int default_threads() {
  if (const char* env = std::getenv("SPHERE_LAMAN_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Ordered parallel map: fn(i) for i in [0, count), results land by index.
template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

sl::RunReport count_one(const sl::Graph& g, const std::string& id, bool force,
                        const sl::CountOptions& opts, bool with_stats) {
  sl::RunReport r;
  r.id = id;
  r.n = g.n();
  r.m = g.m();
  r.laman = sl::is_laman(g);
  r.with_stats = with_stats;
  if (!r.laman && !force) return r;
  if (g.n() < 2 || g.m() != 2 * g.n() - 3) {
    r.error = "ill-posed: |E| != 2n-3";
    return r;
  }
  if (g.n() > 32) {
    r.error = "unsupported: more than 32 vertices";
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  sl::CountStats stats;
  r.count = sl::count_realizations(sl::to_count_problem(g), opts, &stats);
  r.elapsed_ms = ms_since(t0);
  r.stats = stats;
  return r;
}

struct GlobalOpts {
  int threads = 1;
  bool memo = true;
  bool stats = false;
};

int cmd_count(const std::vector<std::string>& files, const std::string& format, bool force,
              const GlobalOpts& g) {
  sl::GraphFormat fmt =
      format == "graph6" ? sl::GraphFormat::Graph6 : sl::GraphFormat::EdgeList;
  std::vector<std::pair<sl::Graph, std::string>> inputs;
  std::vector<std::string> sources = files.empty() ? std::vector<std::string>{"-"} : files;
  for (const std::string& f : sources) {
    std::vector<sl::Graph> graphs;
    if (f == "-") {
      graphs = sl::parse_graphs(std::cin, fmt);
    } else {
      std::ifstream in(f);
      if (!in) {
        std::cerr << "error: cannot open " << f << "\n";
        return 2;
      }
      graphs = sl::parse_graphs(in, fmt);
    }
    std::string base = f == "-" ? "stdin" : f;
    for (std::size_t k = 0; k < graphs.size(); ++k)
      inputs.emplace_back(std::move(graphs[k]), base + ":" + std::to_string(k + 1));
  }

  sl::MemoCache cache;
  sl::CountOptions opts;
  opts.memo = g.memo;
  opts.cache = &cache;
  const int n_inputs = static_cast<int>(inputs.size());
  opts.threads = n_inputs == 1 ? g.threads : 1;
  std::vector<sl::RunReport> reports(n_inputs);
  parallel_for(n_inputs, g.threads, [&](int i) {
    reports[i] = count_one(inputs[i].first, inputs[i].second, force, opts, g.stats);
  });
  for (const sl::RunReport& r : reports) std::cout << sl::to_json_line(r) << "\n";
  return 0;
}

int cmd_sweep(int n, bool max_only, const std::string& corpus_path, bool allow_big,
              const GlobalOpts& g) {
  const int bound = allow_big ? 12 : 9;
  if (n < 3 || n > bound) {
    std::cerr << "error: sweep supports 3 <= n <= " << bound
              << (allow_big ? "" : " (pass --allow-big for larger n; expect a long run)") << "\n";
    return 2;
  }
  sl::LamanCorpus corpus = sl::enumerate_laman(n, bound);
  if (!corpus_path.empty()) {
    std::ofstream out(corpus_path);
    if (!out) {
      std::cerr << "error: cannot write " << corpus_path << "\n";
      return 2;
    }
    sl::write_corpus(out, corpus);
  }

  sl::MemoCache cache;
  sl::CountOptions opts;
  opts.memo = g.memo;
  opts.cache = &cache;
  const int k = static_cast<int>(corpus.graphs.size());
  std::vector<sl::RunReport> reports(k);
  parallel_for(k, g.threads, [&](int i) {
    reports[i] =
        count_one(corpus.graphs[i], sl::to_graph6(corpus.graphs[i]), false, opts, g.stats);
  });

  mpz_class max_count = 0;
  for (const sl::RunReport& r : reports)
    if (r.count && *r.count > max_count) max_count = *r.count;
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["n"] = n;
  summary["graphs"] = k;
  summary["max"] = max_count.get_str();
  std::vector<std::string> argmax;
  for (const sl::RunReport& r : reports)
    if (r.count && *r.count == max_count) argmax.push_back(r.id);
  summary["num_max"] = argmax.size();
  summary["max_graphs"] = argmax;

  if (!max_only)
    for (const sl::RunReport& r : reports) std::cout << sl::to_json_line(r) << "\n";
  std::cout << summary.dump() << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, bool inject_fault) {
  sl::VerifyHooks hooks;
  if (inject_fault)
    hooks.count = [](const sl::CountProblem& p) {
      return sl::count_realizations(p) + 1;
    };
  sl::VerifyReport report = sl::run_verification(seed, hooks);
  for (const sl::VerifyCheck& c : report.checks) {
    nlohmann::ordered_json j;
    j["check"] = c.name;
    j["cases"] = c.cases;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty()) j["detail"] = c.detail;
    std::cout << j.dump() << "\n";
  }
  nlohmann::ordered_json j;
  j["verify"] = report.all_pass() ? "pass" : "fail";
  j["seed"] = seed;
  std::cout << j.dump() << "\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"realization counts of minimally rigid graphs on the sphere"};
  app.require_subcommand(1);

  GlobalOpts global;
  global.threads = default_threads();
  std::string memo = "on";
  app.add_option("--threads", global.threads, "worker threads (env SPHERE_LAMAN_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--memo", memo, "memoization: on|off")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_flag("--stats", global.stats, "attach timing and memo statistics to reports");

  auto* count_cmd = app.add_subcommand("count", "count realizations of input graphs");
  std::vector<std::string> files;
  std::string format = "edge-list";
  bool force = false;
  count_cmd->add_option("files", files, "input files, '-' for stdin (default)");
  count_cmd->add_option("--format", format, "edge-list|graph6")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
  count_cmd->add_flag("--force", force, "also count non-Laman graphs with |E| = 2n-3");

  auto* sweep_cmd = app.add_subcommand("sweep", "count every Laman graph on n vertices");
  int sweep_n = 0;
  bool max_only = false, allow_big = false;
  std::string corpus_path;
  sweep_cmd->add_option("--n", sweep_n, "vertex count")->required();
  sweep_cmd->add_flag("--max-only", max_only, "print only the summary line");
  sweep_cmd->add_option("--write-corpus", corpus_path, "write the graph6 corpus to this file");
  sweep_cmd->add_flag("--allow-big", allow_big, "permit n > 9 (hours of work beyond n = 10)");

  auto* verify_cmd = app.add_subcommand("verify", "cross-validate the recursion and geometry");
  std::uint64_t seed = 20250819;
  bool inject_fault = false;
  verify_cmd->add_option("--seed", seed, "base seed for all randomized checks");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");  // negative-control hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  global.memo = memo == "on";

  try {
    if (count_cmd->parsed()) return cmd_count(files, format, force, global);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_n, max_only, corpus_path, allow_big, global);
    return cmd_verify(seed, inject_fault);
  } catch (const sl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
