#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclechain/classifier.hpp"
#include "cyclechain/errors.hpp"
#include "cyclechain/families.hpp"
#include "cyclechain/graph_io.hpp"
#include "cyclechain/report_io.hpp"
#include "cyclechain/solver.hpp"
#include "cyclechain/verifier.hpp"

namespace {

using namespace cyclechain;
using nlohmann::json;

struct CommonOpts {
  std::string in_path;
  std::string family;
  int n = 0;
  int s = 0;
  int pendant = 0;
  double p = 0.3;
  long long count = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> flags;
  int cap = -1;  // unset: environment, then built-in default
  std::string out;
  std::string format = "json";
};

int resolve_cap(int cli_cap) {
  if (cli_cap >= 0) return cli_cap;
  if (const char* env = std::getenv("CYCLECHAIN_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > INT_MAX)
      throw input_error("CYCLECHAIN_CAP must be a nonnegative integer");
    return static_cast<int>(v);
  }
  return SolverOptions{}.cap;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw input_error("cannot open output file: " + out_path);
  f << text;
}

FamilyFlags parse_flag_names(const std::vector<std::string>& names) {
  FamilyFlags f;
  for (const auto& name : names) {
    if (name == "planar")
      f.planar = true;
    else if (name == "maximal_outerplanar")
      f.maximal_outerplanar = true;
    else if (name == "bipartite_known")
      f.bipartite_known = true;
    else
      throw input_error("unknown flag: " + name);
  }
  return f;
}

FamilySpec spec_from_opts(const CommonOpts& o) {
  FamilySpec spec;
  spec.family = family_from_name(o.family);
  spec.n = o.n;
  spec.subdivisions = o.s;
  spec.pendant = o.pendant;
  spec.p = o.p;
  spec.count = o.count;
  spec.seed = o.seed;
  return spec;
}

bool random_family(Family f) { return f == Family::gnp || f == Family::mop_random; }

Graph stream_graph(const GraphStream& stream, long long index) {
  Graph g = stream.at(index);
  if (stream.size() > 1 && random_family(stream.spec().family))
    return Graph::from_edges(g.vertex_count(), g.edges(),
                             g.label() + "#" + std::to_string(index));
  return g;
}

struct Batch {
  std::vector<Graph> graphs;
  std::vector<FamilyFlags> flags;
};

Batch load_batch(const CommonOpts& o) {
  const bool has_in = !o.in_path.empty();
  const bool has_family = !o.family.empty();
  if (has_in == has_family) throw input_error("pass exactly one of --in and --family");
  Batch b;
  if (has_in) {
    const FamilyFlags f = parse_flag_names(o.flags);
    for (auto& g : read_graph_file(o.in_path)) {
      b.graphs.push_back(std::move(g));
      b.flags.push_back(f);
    }
  } else {
    if (!o.flags.empty()) throw input_error("--flags only applies to file inputs");
    GraphStream stream(spec_from_opts(o));
    if (o.count > 1 && stream.size() == 1)
      throw input_error("--count applies to gnp and mop_random");
    for (long long i = 0; i < stream.size(); ++i) {
      b.graphs.push_back(stream_graph(stream, i));
      b.flags.push_back(stream.flags());
    }
  }
  return b;
}

void validate_checks(const std::vector<std::string>& checks) {
  for (const auto& c : checks)
    if (!is_check_name(c)) throw input_error("unknown check: " + c);
}

// registry-ordered subset actually run, matching verify_all
std::vector<std::string> effective_checks(const std::vector<std::string>& checks) {
  if (checks.empty()) return check_names();
  std::vector<std::string> out;
  for (const auto& name : check_names())
    if (std::find(checks.begin(), checks.end(), name) != checks.end()) out.push_back(name);
  return out;
}

int run_compute(const CommonOpts& o) {
  Batch batch = load_batch(o);
  SolverOptions opt;
  opt.cap = resolve_cap(o.cap);
  std::string text;
  if (o.format == "csv") {
    text = report_csv_header();
    for (const auto& g : batch.graphs) text += report_to_csv(compute_all(g, opt));
  } else if (batch.graphs.size() == 1) {
    text = report_to_json(compute_all(batch.graphs[0], opt));
  } else {
    json arr = json::array();
    for (const auto& g : batch.graphs) arr.push_back(json::parse(report_to_json(compute_all(g, opt))));
    text = arr.dump(2) + "\n";
  }
  write_output(text, o.out);
  return 0;
}

int run_verify(const CommonOpts& o, const std::vector<std::string>& checks) {
  validate_checks(checks);
  Batch batch = load_batch(o);
  SolverOptions opt;
  opt.cap = resolve_cap(o.cap);
  long long fail_count = 0;
  std::string text;
  json arr = json::array();
  if (o.format == "csv") text = check_csv_header();
  for (std::size_t i = 0; i < batch.graphs.size(); ++i) {
    const Graph& g = batch.graphs[i];
    const SubsetClassifier c = SubsetClassifier::build(g, opt);
    const ParameterReport report = compute_all(g, c, opt);
    const VerifyInput in{g, batch.flags[i], report, c};
    const std::vector<CheckResult> results = verify_all(in, checks);
    for (const auto& r : results)
      if (r.status == CheckStatus::fails) ++fail_count;
    if (o.format == "csv") {
      for (const auto& r : results) text += check_to_csv(report.graph6, report.label, r);
    } else {
      arr.push_back(json::parse(verify_to_json(report.graph6, report.label, batch.flags[i], results)));
    }
  }
  if (o.format != "csv") text = batch.graphs.size() == 1 ? arr[0].dump(2) + "\n" : arr.dump(2) + "\n";
  write_output(text, o.out);
  return fail_count > 0 ? 1 : 0;
}

// One sweep input: a generator stream or the graphs of one file.
struct SourceSpec {
  bool is_file = false;
  std::string file;
  FamilyFlags file_flags;
  FamilySpec spec;
  std::string description;
};

std::string describe_spec(const FamilySpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family);
  switch (spec.family) {
    case Family::sun:
      break;
    case Family::subdivided_double_star:
      os << "(n=" << spec.n << ",s=" << spec.subdivisions << ",pendant=" << spec.pendant << ")";
      break;
    case Family::mop_random:
      os << "(n=" << spec.n << ",count=" << spec.count << ",seed=" << spec.seed << ")";
      break;
    case Family::gnp:
      os << "(n=" << spec.n << ",p=" << spec.p << ",count=" << spec.count
         << ",seed=" << spec.seed << ")";
      break;
    default:
      os << "(n=" << spec.n << ")";
      break;
  }
  return os.str();
}

std::vector<SourceSpec> default_profile(std::uint64_t campaign_seed) {
  std::vector<SourceSpec> sources;
  for (int n = 0; n <= 6; ++n) {
    SourceSpec s;
    s.spec.family = Family::all_labeled;
    s.spec.n = n;
    sources.push_back(std::move(s));
  }
  for (int n = 7; n <= 12; ++n) {
    SourceSpec s;
    s.spec.family = Family::gnp;
    s.spec.n = n;
    s.spec.p = 0.3;
    s.spec.count = 100 / n;
    s.spec.seed = splitmix64(campaign_seed ^ static_cast<std::uint64_t>(n));
    sources.push_back(std::move(s));
  }
  return sources;
}

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) throw input_error("unknown " + where + " key: " + item.key());
  }
}

struct SweepPlan {
  std::uint64_t seed = 0;
  int cap = 0;
  std::vector<SourceSpec> sources;
};

SweepPlan parse_config(const std::string& path, int cli_cap) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw input_error("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw input_error("config must be a JSON object");
  require_keys(j, {"seed", "cap", "sources"}, "config");
  SweepPlan plan;
  plan.seed = j.value("seed", std::uint64_t{0});
  plan.cap = j.contains("cap") ? j.at("cap").get<int>() : resolve_cap(cli_cap);
  if (!j.contains("sources") || !j.at("sources").is_array() || j.at("sources").empty())
    throw input_error("config needs a nonempty sources array");
  std::uint64_t index = 0;
  for (const auto& src : j.at("sources")) {
    if (!src.is_object()) throw input_error("config sources must be objects");
    SourceSpec s;
    if (src.contains("file")) {
      require_keys(src, {"file", "flags"}, "file source");
      s.is_file = true;
      s.file = src.at("file").get<std::string>();
      if (src.contains("flags"))
        s.file_flags = parse_flag_names(src.at("flags").get<std::vector<std::string>>());
    } else {
      require_keys(src, {"family", "n", "s", "pendant", "p", "count", "seed"}, "family source");
      if (!src.contains("family")) throw input_error("family source needs a family name");
      s.spec.family = family_from_name(src.at("family").get<std::string>());
      s.spec.n = src.value("n", 0);
      s.spec.subdivisions = src.value("s", 0);
      s.spec.pendant = src.value("pendant", 0);
      s.spec.p = src.value("p", 0.3);
      s.spec.count = src.value("count", static_cast<long long>(1));
      s.spec.seed = src.contains("seed") ? src.at("seed").get<std::uint64_t>()
                                         : splitmix64(plan.seed ^ index);
    }
    plan.sources.push_back(std::move(s));
    ++index;
  }
  return plan;
}

// Work rows are indexed globally across sources; workers own the indices
// congruent to their id so identical runs agree for every job count.
struct SweepRow {
  int error_kind = 0;  // 0 none, 2 input, 3 resource
  std::string error_text;
  std::string graph6;
  std::string label;
  FamilyFlags flags;
  std::vector<signed char> statuses;
  std::vector<CheckResult> failing;
};

struct SweepOpts {
  std::string config;
  std::vector<std::string> checks;
  int jobs = 1;
  bool fail_fast = false;
  std::string corpus;
};

int run_sweep(const CommonOpts& o, const SweepOpts& so, bool seed_given) {
  validate_checks(so.checks);
  const std::vector<std::string> checks = effective_checks(so.checks);
  SweepPlan plan;
  const bool has_config = !so.config.empty();
  const bool has_family = !o.family.empty();
  const bool has_in = !o.in_path.empty();
  if (has_config + has_family + has_in > 1)
    throw input_error("pass at most one of --config, --family and --in");
  if (has_config) {
    if (seed_given) throw input_error("--seed conflicts with --config; set the seed there");
    plan = parse_config(so.config, o.cap);
  } else {
    plan.seed = o.seed;
    plan.cap = resolve_cap(o.cap);
    if (has_family) {
      SourceSpec s;
      s.spec = spec_from_opts(o);
      plan.sources.push_back(std::move(s));
    } else if (has_in) {
      SourceSpec s;
      s.is_file = true;
      s.file = o.in_path;
      s.file_flags = parse_flag_names(o.flags);
      plan.sources.push_back(std::move(s));
    } else {
      plan.sources = default_profile(plan.seed);
    }
  }
  if (!has_in && !o.flags.empty() && !has_config)
    throw input_error("--flags only applies to file inputs");

  // materialize streams / files and the global index layout
  std::vector<GraphStream> streams;
  std::vector<std::vector<Graph>> file_graphs(plan.sources.size());
  std::vector<long long> first(plan.sources.size() + 1, 0);
  for (std::size_t s = 0; s < plan.sources.size(); ++s) {
    auto& src = plan.sources[s];
    long long size = 0;
    if (src.is_file) {
      file_graphs[s] = read_graph_file(src.file);
      size = static_cast<long long>(file_graphs[s].size());
      src.description = "file:" + src.file;
      streams.emplace_back(FamilySpec{});  // placeholder keeps indices aligned
    } else {
      streams.emplace_back(src.spec);
      size = streams.back().size();
      src.description = describe_spec(src.spec);
    }
    first[s + 1] = first[s] + size;
  }
  const long long total = first[plan.sources.size()];

  const int jobs = std::max(1, so.jobs);
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  std::atomic<long long> stop_at{LLONG_MAX};
  auto stop_before = [&](long long i) {
    long long cur = stop_at.load(std::memory_order_relaxed);
    while (i < cur && !stop_at.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
    }
  };

  SolverOptions opt;
  opt.cap = plan.cap;
  auto process = [&](long long i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    try {
      std::size_t s = 0;
      while (first[s + 1] <= i) ++s;
      const long long local = i - first[s];
      const Graph g = plan.sources[s].is_file
                          ? file_graphs[s][static_cast<std::size_t>(local)]
                          : stream_graph(streams[s], local);
      row.flags = plan.sources[s].is_file ? plan.sources[s].file_flags : streams[s].flags();
      const SubsetClassifier c = SubsetClassifier::build(g, opt);
      const ParameterReport report = compute_all(g, c, opt);
      const VerifyInput in{g, row.flags, report, c};
      std::vector<CheckResult> results = verify_all(in, so.checks);
      row.graph6 = report.graph6;
      row.label = report.label;
      bool any_fail = false;
      for (auto& r : results) {
        row.statuses.push_back(static_cast<signed char>(r.status));
        if (r.status == CheckStatus::fails) {
          any_fail = true;
          row.failing.push_back(std::move(r));
        }
      }
      if (any_fail && so.fail_fast) stop_before(i);
    } catch (const resource_error& e) {
      row.error_kind = 3;
      row.error_text = e.what();
      stop_before(i);
    } catch (const input_error& e) {
      row.error_kind = 2;
      row.error_text = e.what();
      stop_before(i);
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  if (jobs == 1) {
    for (long long i = 0; i < total; ++i) {
      if (i > stop_at.load(std::memory_order_relaxed)) continue;
      process(i);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (long long i = w; i < total; i += jobs) {
          if (i > stop_at.load(std::memory_order_relaxed)) continue;
          process(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cerr << "sweep wall time: " << ms << " ms\n";

  const long long end = std::min(total - 1, stop_at.load());
  for (long long i = 0; i <= end; ++i) {
    if (rows[static_cast<std::size_t>(i)].error_kind != 0) {
      std::cerr << "error at graph " << i << ": " << rows[static_cast<std::size_t>(i)].error_text
                << "\n";
      return rows[static_cast<std::size_t>(i)].error_kind;
    }
  }

  SweepSummary summary;
  summary.seed = plan.seed;
  summary.cap = plan.cap;
  summary.graph_count = end + 1;
  for (const auto& src : plan.sources) summary.sources.push_back(src.description);
  for (const auto& name : checks) summary.tallies[name] = {0, 0, 0};
  for (long long i = 0; i <= end; ++i) {
    const SweepRow& row = rows[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < row.statuses.size(); ++k)
      ++summary.tallies[checks[k]][static_cast<std::size_t>(row.statuses[k])];
    for (const auto& r : row.failing)
      summary.failures.push_back({i, row.graph6, r.check});
  }

  if (!so.corpus.empty() && !summary.failures.empty()) {
    std::filesystem::create_directories(so.corpus);
    for (long long i = 0; i <= end; ++i) {
      const SweepRow& row = rows[static_cast<std::size_t>(i)];
      for (const auto& r : row.failing) {
        const std::string path =
            so.corpus + "/fail_" + std::to_string(i) + "_" + r.check + ".json";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw input_error("cannot open corpus file: " + path);
        f << corpus_entry_json(row.graph6, row.label, row.flags, r);
      }
    }
  }

  write_output(o.format == "csv" ? summary_to_csv(summary) : summary_to_json(summary), o.out);
  return summary.failures.empty() ? 0 : 1;
}

int run_families(const CommonOpts& o, const std::string& emit) {
  if (o.family.empty()) {
    std::string text;
    text += "path                    --n >= 0\n";
    text += "cycle                   --n >= 3\n";
    text += "complete                0 <= --n <= 64\n";
    text += "fan                     --n >= 3, hub joined to a path\n";
    text += "double_star             --n >= 1 satellites on two adjacent hubs\n";
    text += "subdivided_double_star  --n >= 1, --s >= 0, --pendant >= 0\n";
    text += "sun                     hexagon with inner triangle, fixed order 6\n";
    text += "mop_random              --n >= 3, --count, --seed\n";
    text += "gnp                     0 <= --n <= 64, --p in [0, 1], --count, --seed\n";
    text += "all_labeled             0 <= --n <= 8, every labeled graph in index order\n";
    write_output(text, o.out);
    return 0;
  }
  if (!o.flags.empty()) throw input_error("--flags only applies to file inputs");
  GraphStream stream(spec_from_opts(o));
  if (o.count > 1 && stream.size() == 1)
    throw input_error("--count applies to gnp and mop_random");
  std::string text;
  for (long long i = 0; i < stream.size(); ++i) {
    const Graph g = stream_graph(stream, i);
    if (emit == "edges") {
      if (i > 0) text += "\n";
      text += to_edge_list(g);
    } else {
      text += to_graph6(g) + "\n";
    }
  }
  write_output(text, o.out);
  return 0;
}

void add_family_options(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--family", o.family, "generator family (see the families subcommand)");
  sub->add_option("--n", o.n, "family order parameter");
  sub->add_option("--s", o.s, "subdivided_double_star: internal path vertices");
  sub->add_option("--pendant", o.pendant, "subdivided_double_star: pendant path length");
  sub->add_option("--p", o.p, "gnp edge probability");
  sub->add_option("--count", o.count, "draws from gnp / mop_random");
  sub->add_option("--seed", o.seed, "base seed");
}

void add_io_options(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--in", o.in_path, "input graph file (.g6 or .txt)");
  sub->add_option("--flags", o.flags, "file inputs: planar,maximal_outerplanar,bipartite_known")
      ->delimiter(',');
  sub->add_option("--cap", o.cap, "vertex cap for the exponential solvers");
  sub->add_option("--out", o.out, "write output here instead of stdout");
  sub->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chain parameters and machine-checked bounds for cycle and odd "
               "cycle domination"};
  app.require_subcommand(1);

  CommonOpts compute_opts, verify_opts, sweep_opts, families_opts;
  std::vector<std::string> verify_checks;
  SweepOpts sweep_extra;
  std::string families_emit = "g6";

  CLI::App* compute = app.add_subcommand("compute", "solve the twelve chain parameters");
  add_family_options(compute, compute_opts);
  add_io_options(compute, compute_opts);

  CLI::App* verify = app.add_subcommand("verify", "run the bound and lemma checks");
  add_family_options(verify, verify_opts);
  add_io_options(verify, verify_opts);
  verify->add_option("--checks", verify_checks, "comma-separated check subset")->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "verify a campaign of graphs");
  add_family_options(sweep, sweep_opts);
  add_io_options(sweep, sweep_opts);
  sweep->add_option("--config", sweep_extra.config, "campaign description file");
  sweep->add_option("--checks", sweep_extra.checks, "comma-separated check subset")
      ->delimiter(',');
  sweep->add_option("--jobs", sweep_extra.jobs, "worker threads");
  sweep->add_flag("--fail-fast", sweep_extra.fail_fast, "stop after the first failing graph");
  sweep->add_option("--corpus", sweep_extra.corpus, "directory for counterexample files");

  CLI::App* families = app.add_subcommand("families", "list generators or emit their graphs");
  add_family_options(families, families_opts);
  families->add_option("--out", families_opts.out, "write output here instead of stdout");
  families->add_option("--emit", families_emit, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opts);
    if (verify->parsed()) return run_verify(verify_opts, verify_checks);
    if (sweep->parsed()) return run_sweep(sweep_opts, sweep_extra, sweep->count("--seed") > 0);
    return run_families(families_opts, families_emit);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
