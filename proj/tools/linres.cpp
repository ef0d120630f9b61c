// linres: Betti numbers, Hilbert series and verification reports for edge
// ideals with linear resolutions.
//
//   linres analyze <file> [--oracle] [--assert-linear m] [--max-n N] [--json | --text]
//   linres generate <family> [--n N] [--m M] [--seed S] [--permille P] [--count K] [--out PATH]
//   linres verify <dir> [--oracle] [--assert-linear m] [--max-n N] [--json | --text]
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 resource cap.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "linres/error.hpp"
#include "linres/generate.hpp"
#include "linres/io.hpp"
#include "linres/report.hpp"

namespace {

using namespace linres;

struct CommonFlags {
  bool oracle = false;
  std::optional<int> assert_linear;
  int max_n = kDefaultOracleCap;
  bool json = false;
  bool text = false;

  void attach(CLI::App* app) {
    app->add_flag("--oracle", oracle, "Compute graded Betti numbers with Hochster's formula and compare");
    app->add_option("--assert-linear", assert_linear, "Trust an m-linear resolution without recognition");
    app->add_option("--max-n", max_n, "Vertex cap for the oracle")->check(CLI::Range(1, kHardOracleCap));
    auto* j = app->add_flag("--json", json, "JSON output");
    app->add_flag("--text", text, "Human-readable output (default)")->excludes(j);
  }

  AnalyzeOptions options() const { return {oracle, assert_linear, max_n}; }
};

int run_analyze(const std::string& path, const CommonFlags& flags) {
  const AnalysisReport report = analyze(read_input_file(path), path, flags.options());
  std::cout << (flags.json ? render_json(report) : render_text(report));
  return report.passed() ? 0 : 1;
}

int run_verify(const std::string& dir, const CommonFlags& flags) {
  const VerifySummary summary = verify_corpus(dir, flags.options());
  if (flags.json) {
    std::cout << to_json(summary).dump(2) << '\n';
  } else {
    static const char* names[] = {"PASS", "FAIL", "NOT-LINEAR", "INPUT-ERROR", "TOO-LARGE"};
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& e : summary.entries) {
      std::cout << names[static_cast<int>(e.status)] << "  " << e.file;
      for (const auto& c : e.failed_checks) std::cout << "  " << c;
      if (!e.message.empty()) std::cout << "  " << e.message;
      std::cout << '\n';
    }
    std::cout << summary.entries.size() << " entries, exit code " << summary.exit_code() << '\n';
  }
  return summary.exit_code();
}

struct GenerateFlags {
  std::string family;
  int n = 4;
  int m = 2;
  std::uint64_t seed = 1;
  unsigned permille = 500;
  int count = 1;
  std::string out;
};

std::string generate_one(const GenerateFlags& g, std::uint64_t seed) {
  if (g.family == "complete") return format_graph(complete_graph(g.n));
  if (g.family == "bipartite") return format_graph(complete_bipartite_graph(g.n, g.m));
  if (g.family == "path") return format_graph(path_graph(g.n));
  if (g.family == "cycle") return format_graph(cycle_graph(g.n));
  if (g.family == "random-chordal") return format_graph(random_chordal_graph(g.n, seed));
  if (g.family == "random-cochordal") return format_graph(complement(random_chordal_graph(g.n, seed)));
  if (g.family == "random") return format_graph(random_graph(g.n, g.permille, seed));
  if (g.family == "random-uniform") return format_hypergraph(random_uniform_hypergraph(g.n, g.m, g.permille, seed));
  throw Error(ErrorKind::BadParams, "unknown family " + g.family);
}

int run_generate(const GenerateFlags& g) {
  if (g.count < 1) throw Error(ErrorKind::BadParams, "--count must be positive");
  if (g.count == 1) {
    const std::string text = generate_one(g, g.seed);
    if (g.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream(g.out) << text;
    }
    return 0;
  }
  if (g.out.empty()) throw Error(ErrorKind::BadParams, "--count above 1 needs --out <directory>");
  std::filesystem::create_directories(g.out);
  for (int k = 0; k < g.count; ++k) {
    const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(k);
    char name[64];
    std::snprintf(name, sizeof name, "%s-%04d.txt", g.family.c_str(), k);
    std::ofstream(std::filesystem::path(g.out) / name) << generate_one(g, seed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers and Hilbert series of edge ideals with linear resolutions"};
  app.require_subcommand(1);

  std::string path;
  CommonFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph or uniform hypergraph file");
  analyze_cmd->add_option("file", path, "Input file")->required();
  analyze_flags.attach(analyze_cmd);

  GenerateFlags gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write graph files from a family");
  generate_cmd
      ->add_option("family", gen.family,
                   "complete | bipartite | path | cycle | random-chordal | random-cochordal | random | random-uniform")
      ->required();
  generate_cmd->add_option("--n", gen.n, "Vertex count (first part for bipartite)");
  generate_cmd->add_option("--m", gen.m, "Second part for bipartite, uniformity for random-uniform");
  generate_cmd->add_option("--seed", gen.seed, "Seed for random families");
  generate_cmd->add_option("--permille", gen.permille, "Edge probability in thousandths");
  generate_cmd->add_option("--count", gen.count, "Number of files; seeds seed, seed+1, ...");
  generate_cmd->add_option("--out", gen.out, "Output file, or directory when --count > 1");

  std::string dir;
  CommonFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Analyze every file in a directory");
  verify_cmd->add_option("dir", dir, "Corpus directory")->required();
  verify_flags.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(path, analyze_flags);
    if (*generate_cmd) return run_generate(gen);
    return run_verify(dir, verify_flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
