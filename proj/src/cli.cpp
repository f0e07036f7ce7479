#include "dpcover/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "dpcover/io.hpp"

namespace dpcover {

namespace {

namespace fs = std::filesystem;

std::string hex64(std::uint64_t value) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << value;
  return os.str();
}

std::vector<int> parse_row(const std::string& text) {
  const auto bad = [] {
    return CLI::ValidationError("--row", "expected comma-separated "
                                         "nonnegative integers");
  };
  std::vector<int> row;
  std::string chunk;
  std::istringstream is(text);
  while (std::getline(is, chunk, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(chunk, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != chunk.size() || value < 0) throw bad();
    row.push_back(value);
  }
  if (row.empty()) throw bad();
  return row;
}

CapacityMatrix uniform_caps(const Graph& g, const std::vector<int>& row) {
  CapacityMatrix fm;
  fm.colors = static_cast<int>(row.size());
  for (Vertex v : g.vertices()) fm.rows[v] = row;
  return fm;
}

void print_outcome(std::ostream& out, const SolveOutcome& o,
                   const std::vector<std::string>* trace) {
  out << format_outcome(o);
  if (trace) {
    out << "trace\n";
    for (const auto& line : *trace) out << "  " << line << '\n';
  }
}

int cmd_analyze(const std::string& graph_path, std::ostream& out) {
  const Graph g = load_graph_file(graph_path);
  out << "vertices " << g.vertex_count() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "planar-bound " << (euler_planarity_sanity(g) ? "ok" : "violated")
      << '\n';
  if (const auto w = find_c4_adjacent_c3(g)) {
    out << "c4-adjacent-c3";
    for (Vertex v : w->four_cycle) out << ' ' << v;
    out << " |";
    for (Vertex v : w->triangle) out << ' ' << v;
    out << '\n';
  } else {
    out << "c4-adjacent-c3 none\n";
  }
  if (const auto f = find_config_f(g)) {
    out << "configF";
    for (Vertex v : f->ring) out << ' ' << v;
    out << '\n';
  } else {
    out << "configF none\n";
  }
  return 0;
}

struct SolveArgs {
  std::string graph_path;
  std::string caps_path;
  std::string cover_path;
  bool diagonal = false;
  std::int64_t random_seed = -1;
  std::string method = "constructive";
  bool trace = false;
};

Cover make_cover(const Graph& g, const CapacityMatrix& fm,
                 const SolveArgs& a) {
  if (!a.cover_path.empty()) return load_cover_file(a.cover_path, g);
  if (a.random_seed >= 0)
    return random_cover(g, fm.colors,
                        static_cast<std::uint64_t>(a.random_seed));
  return diagonal_cover(g, ListAssignment::uniform(g, fm.colors));
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Graph g = load_graph_file(a.graph_path);
  const CapacityMatrix fm = load_capacities_file(a.caps_path, g);
  const Cover h = make_cover(g, fm, a);
  out << "cover-hash " << hex64(cover_hash(h)) << '\n';
  if (a.method == "oracle") {
    const SolveOutcome o = solve_bruteforce(h, fm);
    print_outcome(out, o, nullptr);
    return 0;
  }
  std::vector<std::string> trace;
  const SolveOutcome o = dp_color_planar(g, h, fm, &trace);
  print_outcome(out, o, a.trace ? &trace : nullptr);
  return 0;
}

struct SweepArgs {
  std::string dir;
  std::string row_text = "2,2";
  bool all_covers = false;
  std::uint64_t max_covers = kDefaultMaxCovers;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const std::vector<int> row = parse_row(a.row_text);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  int solved = 0, skipped = 0, failed = 0;
  for (const auto& path : paths) {
    const std::string name = path.filename().string();
    try {
      const Graph g = load_graph_file(path.string());
      const CapacityMatrix fm = uniform_caps(g, row);
      if (a.all_covers) {
        CoverEnumerator stream(g, fm.colors, a.max_covers);
        for (std::uint64_t i = 0; i < stream.size(); ++i)
          dp_color_planar(g, stream.at(i), fm, nullptr);
        out << "ok " << name << " covers=" << stream.size() << '\n';
      } else {
        dp_color_planar(g, diagonal_cover(g, ListAssignment::uniform(
                                                 g, fm.colors)),
                        fm, nullptr);
        out << "ok " << name << " vertices=" << g.vertex_count()
            << " edges=" << g.edge_count() << '\n';
      }
      ++solved;
    } catch (const HypothesisViolatedError& e) {
      out << "skip " << name << ": " << e.what() << '\n';
      ++skipped;
    } catch (const CombinatorialBlowupError& e) {
      out << "skip " << name << ": " << e.what() << '\n';
      ++skipped;
    } catch (const Error& e) {
      out << "fail " << name << ": " << e.what() << '\n';
      ++failed;
    }
  }
  out << "swept " << solved << " skipped " << skipped << " failed " << failed
      << '\n';
  return failed == 0 ? 0 : 1;
}

struct FuzzArgs {
  std::string graph_path;
  std::string row_text = "2,2";
  std::uint64_t covers = 100;
  std::uint64_t seed = 1;
};

int cmd_fuzz(const FuzzArgs& a, std::ostream& out) {
  const Graph g = load_graph_file(a.graph_path);
  const std::vector<int> row = parse_row(a.row_text);
  const CapacityMatrix fm = uniform_caps(g, row);
  std::mt19937_64 master(a.seed);
  std::uint64_t agreed = 0, disagreed = 0;
  for (std::uint64_t i = 0; i < a.covers; ++i) {
    const std::uint64_t cover_seed = master();
    const Cover h = random_cover(g, fm.colors, cover_seed);
    const SolveOutcome oracle = solve_bruteforce(h, fm);
    bool constructive_found = false;
    std::string note;
    try {
      dp_color_planar(g, h, fm, nullptr);
      constructive_found = true;
    } catch (const HypothesisViolatedError&) {
      throw;  // cover-independent: a usage error, not a disagreement
    } catch (const Error& e) {
      note = e.what();
    }
    const bool oracle_found = oracle.status == SolveOutcome::Status::Found;
    if (constructive_found && oracle_found) {
      ++agreed;
      out << "cover " << i << " hash=" << hex64(cover_hash(h)) << " agree\n";
    } else {
      ++disagreed;
      out << "cover " << i << " hash=" << hex64(cover_hash(h))
          << " disagree constructive="
          << (constructive_found ? "found" : std::string("error: ") + note)
          << " oracle=" << (oracle_found ? "found" : "infeasible") << '\n';
    }
  }
  out << "agreed " << agreed << "/" << (agreed + disagreed) << '\n';
  return disagreed == 0 ? 0 : 1;
}

struct EnumArgs {
  std::string graph_path;
  int colors = 2;
  std::uint64_t limit = 0;
  std::uint64_t max_covers = kDefaultMaxCovers;
};

int cmd_enum(const EnumArgs& a, std::ostream& out) {
  const Graph g = load_graph_file(a.graph_path);
  CoverEnumerator stream(g, a.colors, a.max_covers);
  out << "covers " << stream.size() << '\n';
  const std::uint64_t shown = std::min<std::uint64_t>(a.limit, stream.size());
  for (std::uint64_t i = 0; i < shown; ++i)
    out << "cover " << i << " hash=" << hex64(cover_hash(stream.at(i)))
        << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"DP-coloring toolkit: covers, degeneracy certificates and the "
               "constructive planar solver"};
  app.require_subcommand(1);

  std::string analyze_graph;
  auto* analyze = app.add_subcommand("analyze", "structural report for a graph");
  analyze->add_option("graph", analyze_graph, "edge-list file")->required();

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "color one instance");
  solve->add_option("graph", sa.graph_path, "edge-list file")->required();
  solve->add_option("--caps", sa.caps_path, "capacity file")->required();
  auto* src_cover = solve->add_option("--cover", sa.cover_path, "cover file");
  auto* src_diag = solve->add_flag("--diagonal", sa.diagonal,
                                   "identity matchings on full lists");
  auto* src_rand = solve->add_option("--random-seed", sa.random_seed,
                                     "random cover from this seed");
  src_cover->excludes(src_diag)->excludes(src_rand);
  src_diag->excludes(src_rand);
  solve->add_option("--method", sa.method, "constructive or oracle")
      ->check(CLI::IsMember({"constructive", "oracle"}));
  solve->add_flag("--trace", sa.trace, "print reduction steps");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "solve every .txt graph in a directory");
  sweep->add_option("dir", wa.dir, "directory of edge-list files")->required();
  sweep->add_option("--row", wa.row_text, "uniform capacity row, e.g. 2,2");
  sweep->add_flag("--all-covers", wa.all_covers,
                  "exhaust every perfect-matching cover");
  sweep->add_option("--max-covers", wa.max_covers,
                    "abort enumeration beyond this many covers");

  FuzzArgs fa;
  auto* fuzz = app.add_subcommand("fuzz",
                                  "compare solver and oracle on random covers");
  fuzz->add_option("graph", fa.graph_path, "edge-list file")->required();
  fuzz->add_option("--row", fa.row_text, "uniform capacity row, e.g. 2,2");
  fuzz->add_option("--covers", fa.covers, "number of random covers");
  fuzz->add_option("--seed", fa.seed, "master seed");

  EnumArgs ea;
  auto* enum_covers = app.add_subcommand("enum-covers",
                                         "hash the full cover stream");
  enum_covers->add_option("graph", ea.graph_path, "edge-list file")->required();
  enum_covers->add_option("--colors", ea.colors, "list size s")->required();
  enum_covers->add_option("--limit", ea.limit, "print hashes for a prefix");
  enum_covers->add_option("--max-covers", ea.max_covers,
                          "abort enumeration beyond this many covers");

  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (analyze->parsed()) code = cmd_analyze(analyze_graph, out);
    else if (solve->parsed()) code = cmd_solve(sa, out);
    else if (sweep->parsed()) code = cmd_sweep(wa, out);
    else if (fuzz->parsed()) code = cmd_fuzz(fa, out);
    else if (enum_covers->parsed()) code = cmd_enum(ea, out);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err);
    if (code != 0) code = 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  } catch (const HypothesisViolatedError& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  } catch (const CombinatorialBlowupError& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = 1;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  err << "wall-time-ms "
      << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
      << '\n';
  return code;
}

}  // namespace dpcover
