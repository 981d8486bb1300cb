// deltacheck: delta-polynomials of lattice polytopes, three ways.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "deltacheck/commands.hpp"
#include "deltacheck/io.hpp"
#include "deltacheck/selftest.hpp"

using namespace deltacheck;

namespace {

int emit(const CommandOutput& r) {
  std::cout << r.out;
  return r.exit_code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_selftest(bool deep, std::uint64_t seed, const std::string& golden_file) {
  SelftestOptions opt = selftest_options(deep);
  opt.seed = seed;
  if (!golden_file.empty()) opt.golden = parse_golden_table(slurp(golden_file));
  Selftest suite(std::move(opt));
  const auto results = suite.run_all();
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    criteria.push_back(std::move(c));
    all = all && r.passed;
    std::cerr << "criterion " << r.id << (r.passed ? " PASS " : " FAIL ") << r.seconds << "s: "
              << r.detail << "\n";
  }
  Json j;
  j["criteria"] = std::move(criteria);
  j["passed"] = all;
  std::cout << render(j);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify delta-polynomials of lattice polytopes and their monotonicity."};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string file, method = "all", out_dir = ".", golden_file;
  bool deep = false, timing = false;
  PairBounds bounds;
  unsigned count = 1;

  auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Seed for triangulation heights"); };

  auto* delta = app.add_subcommand("delta", "Print delta by counting, box decomposition and/or orbifold ring");
  delta->add_option("file", file, "Polytope JSON file")->required();
  delta->add_option("--method", method, "count, boxes, orbifold or all");
  add_seed(delta);

  auto* hvector = app.add_subcommand("hvector", "Print h_T of a regular triangulation and whether it is unimodular");
  hvector->add_option("file", file, "Polytope JSON file")->required();
  add_seed(hvector);

  auto* decompose = app.add_subcommand("decompose", "Print the per-face box and link h-vector terms");
  decompose->add_option("file", file, "Polytope JSON file")->required();
  add_seed(decompose);

  auto* orbifold = app.add_subcommand("orbifold", "Print graded pieces of the deformed group ring quotient");
  orbifold->add_option("file", file, "Polytope JSON file")->required();
  add_seed(orbifold);

  auto* monotone = app.add_subcommand("monotone", "Verify delta_Q <= delta_P for a pair file");
  monotone->add_option("file", file, "Pair JSON file")->required();
  monotone->add_flag("--timing", timing, "Include wall time in the report");
  add_seed(monotone);

  auto* gen = app.add_subcommand("gen", "Write seeded nested pair files");
  gen->add_option("--dim", bounds.dim, "Dimension (1..3)")->required();
  gen->add_option("--max-coord", bounds.max_coord, "Coordinate bound (<= 6)")->required();
  gen->add_option("--count", count, "Number of pairs");
  gen->add_option("--out", out_dir, "Output directory");
  gen->add_flag("--unbounded", bounds.unbounded, "Lift the size guardrails");
  add_seed(gen);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--deep", deep, "Larger sweeps and extra count checks");
  selftest->add_option("--golden", golden_file, "Replace the golden table (JSON)");
  std::uint64_t selftest_seed = SelftestOptions{}.seed;
  selftest->add_option("--seed", selftest_seed, "Seed for the corpus and pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*delta) return emit(cmd_delta(load_polytope_file(file), parse_method(method), seed));
    if (*hvector) return emit(cmd_hvector(load_polytope_file(file), seed));
    if (*decompose) return emit(cmd_decompose(load_polytope_file(file), seed));
    if (*orbifold) return emit(cmd_orbifold(load_polytope_file(file), seed));
    if (*monotone) {
      auto [p, q] = load_pair_file(file);
      return emit(cmd_monotone(p, q, seed, timing));
    }
    if (*gen) return emit(cmd_gen(bounds, count, seed, out_dir));
    if (*selftest) return run_selftest(deep, selftest_seed, golden_file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
