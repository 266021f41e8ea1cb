// Copyright 2026 The ssr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssr_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ssr/errors.hpp"
#include "ssr/graph_io.hpp"
#include "ssr/nmi.hpp"
#include "ssr/parallel.hpp"
#include "ssr/partition_io.hpp"
#include "ssr/partitioner.hpp"
#include "ssr/planted.hpp"

namespace ssr::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string out(buf);
  if (out == "-0.000000") out.erase(0, 1);
  return out;
}

struct GraphArgs {
  std::string input;
  std::string format;
  bool directed = false;
  bool weighted = false;

  void add_to(CLI::App& app) {
    app.add_option("--input", input, "Graph file")->required();
    app.add_option("--format", format,
                   "edgelist or gml (default: from the file extension)")
        ->check(CLI::IsMember({"edgelist", "gml"}));
    app.add_flag("--directed", directed, "Treat edge-list input as directed");
    app.add_flag("--weighted", weighted, "Read edge weights");
  }

  GraphFormat resolved_format() const {
    if (format == "gml") return GraphFormat::kGml;
    if (format == "edgelist") return GraphFormat::kEdgeList;
    return fs::path(input).extension() == ".gml" ? GraphFormat::kGml
                                                 : GraphFormat::kEdgeList;
  }

  std::string format_name() const {
    return resolved_format() == GraphFormat::kGml ? "gml" : "edgelist";
  }

  Graph load() const {
    return load_graph(input, resolved_format(), directed, weighted);
  }
};

struct SolverArgs {
  std::string method = "ssr";
  double tol = 1e-7;
  SsrConfig cfg;

  void add_to(CLI::App& app) {
    app.add_option("--method", method, "ssr or spectral")
        ->check(CLI::IsMember({"ssr", "spectral"}))
        ->capture_default_str();
    app.add_option("--sigma", cfg.sigma, "Rounding threshold")
        ->capture_default_str();
    app.add_option("--epsilon", cfg.epsilon_min,
                   "Minimum fraction fixed per round")
        ->capture_default_str();
    app.add_option("--tol", tol, "Convergence tolerance")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Kernel threads (0: all cores)")
        ->capture_default_str();
    app.add_option("--chunk-rows", cfg.chunk_rows, "Rows per kernel chunk")
        ->capture_default_str();
  }

  SsrConfig resolved() const {
    SsrConfig c = cfg;
    c.inner_tol = tol;
    c.power_tol = tol;
    c.validate();
    return c;
  }

  Method resolved_method() const {
    return method == "spectral" ? Method::kSpectral : Method::kSsr;
  }
};

std::size_t resolved_threads(std::size_t threads) {
  return threads == 0 ? ThreadPool::hardware_threads() : threads;
}

json config_json(const SsrConfig& c, const std::string& method) {
  return json{{"method", method},
              {"sigma", c.sigma},
              {"epsilon", c.epsilon_min},
              {"inner_tol", c.inner_tol},
              {"inner_max_iter", c.inner_max_iter},
              {"power_tol", c.power_tol},
              {"power_max_iter", c.power_max_iter},
              {"seed", c.seed},
              {"threads", resolved_threads(c.threads)},
              {"chunk_rows", c.chunk_rows}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write failure on " + path);
}

std::vector<std::size_t> parse_thread_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || v == 0) {
      throw ValidationError("bad thread count '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty thread list");
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ---- subcommands ----------------------------------------------------------

struct DetectCmd {
  GraphArgs graph;
  SolverArgs solver;
  std::string output;
  std::string json_path;

  void add_to(CLI::App& app) {
    graph.add_to(app);
    solver.add_to(app);
    app.add_option("--output", output, "Partition file to write");
    app.add_option("--json", json_path, "Run manifest to write");
  }

  int run(std::ostream& out) const {
    const SsrConfig cfg = solver.resolved();
    const Graph g = graph.load();
    const DetectReport report = detect(g, cfg, solver.resolved_method());
    const Partition& p = report.partition;

    if (!output.empty()) save_labels(output, g.tokens(), p.labels);
    if (!json_path.empty()) {
      json m;
      m["schema"] = 1;
      m["command"] = "detect";
      m["version"] = SSR_VERSION_STRING;
      m["input"] = graph.input;
      m["format"] = graph.format_name();
      m["directed"] = g.directed();
      m["weighted"] = graph.weighted;
      m["config"] = config_json(cfg, solver.method);
      m["vertices"] = g.num_vertices();
      m["edges"] = g.num_edges();
      m["wall_seconds"] = report.wall_seconds;
      m["matvecs"] = report.matvecs;
      m["work"] = report.work;
      m["bisections"] = report.bisection_count;
      m["q"] = p.q;
      m["communities"] = p.num_communities();
      write_text(json_path, m.dump(2) + "\n");
    }
    out << "Q=" << fixed6(p.q) << "\n"
        << "communities=" << p.num_communities() << "\n";
    return kExitOk;
  }
};

struct ScoreCmd {
  GraphArgs graph;
  std::string labels;

  void add_to(CLI::App& app) {
    graph.add_to(app);
    app.add_option("--labels", labels, "Partition file")->required();
  }

  int run(std::ostream& out) const {
    const Graph g = graph.load();
    const auto aligned = align_labels(load_labels(labels), g.tokens());
    out << "Q=" << fixed6(modularity(g, aligned).q) << "\n";
    return kExitOk;
  }
};

struct NmiCmd {
  std::string truth;
  std::string candidate;

  void add_to(CLI::App& app) {
    app.add_option("--truth", truth, "Reference partition file")->required();
    app.add_option("--candidate", candidate, "Partition file to evaluate")
        ->required();
  }

  int run(std::ostream& out) const {
    const LabelFile t = load_labels(truth);
    const LabelFile c = load_labels(candidate);
    const auto aligned = align_labels(c, t.tokens);
    out << "NMI=" << fixed6(nmi(t.labels, aligned)) << "\n";
    return kExitOk;
  }
};

struct GenerateCmd {
  PlantedConfig cfg;
  std::string prefix;

  void add_to(CLI::App& app) {
    app.add_option("--n", cfg.n, "Vertices")->required();
    app.add_option("--communities", cfg.communities, "Planted communities")
        ->required();
    app.add_option("--avg-degree", cfg.avg_degree, "Average degree")
        ->required();
    app.add_option("--max-degree", cfg.max_degree, "Maximum degree")
        ->required();
    app.add_option("--mixing", cfg.mixing, "Inter-community edge fraction")
        ->required();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--output", prefix, "Output prefix")->required();
  }

  int run(std::ostream& out, std::ostream& err) const {
    const PlantedGraph pg = generate_planted(cfg);
    const Graph& g = pg.graph;

    std::ostringstream edges;
    write_edge_list(edges, g);

    // The edge list cannot carry isolated vertices, so the truth file lists
    // vertices in the order they first appear there.
    std::vector<std::string> tokens;
    std::vector<CommunityId> labels;
    std::vector<char> seen(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
      for (VertexId v : {e.src, e.dst}) {
        if (seen[v]) continue;
        seen[v] = 1;
        tokens.push_back(g.token(v));
        labels.push_back(pg.truth.labels[v]);
      }
    }
    std::ostringstream truth;
    write_labels(truth, tokens, labels);

    write_text(prefix + ".edges", edges.str());
    write_text(prefix + ".truth", truth.str());
    if (tokens.size() != g.num_vertices()) {
      err << "note: " << g.num_vertices() - tokens.size()
          << " isolated vertices omitted\n";
    }
    out << "vertices=" << tokens.size() << "\n"
        << "edges=" << g.num_edges() << "\n"
        << "mixing=" << fixed6(pg.realized_mixing) << "\n";
    return kExitOk;
  }
};

struct BenchCmd {
  GraphArgs graph;
  SolverArgs solver;
  std::string thread_list = "1,2,4,8";
  std::size_t repeats = 3;
  std::string csv;

  void add_to(CLI::App& app) {
    graph.add_to(app);
    solver.add_to(app);
    app.add_option("--threads-list", thread_list, "Comma-separated counts")
        ->capture_default_str();
    app.add_option("--repeats", repeats, "Runs per thread count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--csv", csv, "CSV file to write");
  }

  int run(std::ostream& out) const {
    const std::vector<std::size_t> counts = parse_thread_list(thread_list);
    SsrConfig cfg = solver.resolved();
    const Graph g = graph.load();

    struct Row {
      std::size_t threads;
      double median;
      double q;
      bool identical;
    };
    std::vector<Row> rows;
    std::vector<CommunityId> reference;
    for (std::size_t t : counts) {
      cfg.threads = t;
      ThreadPool pool(t);
      std::vector<double> times;
      double q = 0.0;
      bool identical = true;
      for (std::size_t r = 0; r < repeats; ++r) {
        const DetectReport rep = detect(g, cfg, solver.resolved_method(), &pool);
        times.push_back(rep.wall_seconds);
        q = rep.partition.q;
        if (reference.empty()) reference = rep.partition.labels;
        identical = identical && rep.partition.labels == reference;
      }
      rows.push_back({t, median(times), q, identical});
    }

    double base = rows.front().median;
    for (const Row& r : rows) {
      if (r.threads == 1) {
        base = r.median;
        break;
      }
    }

    std::ostringstream table;
    table << std::left << std::setw(8) << "threads" << std::right
          << std::setw(14) << "median_s" << std::setw(10) << "speedup"
          << std::setw(12) << "Q" << std::setw(11) << "identical" << "\n";
    std::ostringstream csv_text;
    csv_text << "threads,median_seconds,speedup,q,identical\n";
    for (const Row& r : rows) {
      const double speedup = r.median > 0.0 ? base / r.median : 0.0;
      char line[160];
      std::snprintf(line, sizeof line, "%-8zu%14.6f%10.3f%12.6f%11s\n",
                    r.threads, r.median, speedup, r.q,
                    r.identical ? "yes" : "no");
      table << line;
      std::snprintf(line, sizeof line, "%zu,%.9g,%.6f,%.17g,%d\n", r.threads,
                    r.median, speedup, r.q, r.identical ? 1 : 0);
      csv_text << line;
    }
    out << table.str();
    if (!csv.empty()) write_text(csv, csv_text.str());
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Modularity community detection by successive spectral relaxation",
               "ssr"};
  app.set_version_flag("--version", SSR_VERSION_STRING);
  app.require_subcommand(1);

  DetectCmd detect_cmd;
  ScoreCmd score_cmd;
  NmiCmd nmi_cmd;
  GenerateCmd generate_cmd;
  BenchCmd bench_cmd;
  auto* detect_app = app.add_subcommand("detect", "Find communities");
  detect_cmd.add_to(*detect_app);
  auto* score_app = app.add_subcommand("score", "Modularity of a partition file");
  score_cmd.add_to(*score_app);
  auto* nmi_app = app.add_subcommand("nmi", "Compare two partition files");
  nmi_cmd.add_to(*nmi_app);
  auto* generate_app =
      app.add_subcommand("generate", "Planted-partition benchmark graph");
  generate_cmd.add_to(*generate_app);
  auto* bench_app = app.add_subcommand("bench", "Thread scaling of detect");
  bench_cmd.add_to(*bench_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (detect_app->parsed()) return detect_cmd.run(out);
    if (score_app->parsed()) return score_cmd.run(out);
    if (nmi_app->parsed()) return nmi_cmd.run(out);
    if (generate_app->parsed()) return generate_cmd.run(out, err);
    if (bench_app->parsed()) return bench_cmd.run(out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ssr::cli
