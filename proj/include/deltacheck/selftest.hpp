#pragma once

// Acceptance suite: seven criteria over a golden table, a seeded corpus of
// polytopes and a seeded set of nested pairs.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deltacheck/monotone.hpp"
#include "deltacheck/orbring.hpp"
#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"
#include "deltacheck/triangulation.hpp"

namespace deltacheck {

struct GoldenCase {
  LatticePolytope polytope;
  IntPoly delta;
};

/// Segments [0,k] (k <= 4), unit square and cube, 2 * standard triangle,
/// Reeve tetrahedra (h = 2..5) and standard simplices (dims 1..3).
std::vector<GoldenCase> golden_table();

/// Golden table in the format [{"name": ..., "vertices": ..., "delta": [...]}, ...].
std::vector<GoldenCase> parse_golden_table(const std::string& text);

/// Seeded full-dimensional polytopes, dims cycling 1, 2, 3, coordinates in [0, max_coord].
std::vector<LatticePolytope> generated_corpus(unsigned count, unsigned max_coord,
                                              std::uint64_t seed);

struct SelftestOptions {
  bool deep = false;
  std::uint64_t seed = 2024;
  unsigned corpus_size = 50;
  unsigned corpus_max_coord = 4;
  unsigned triangulation_seeds = 3;
  unsigned pair_count = 100;
  unsigned pair_max_coord = 3;
  std::size_t hom_samples = kDefaultHomSamples;
  /// Replaces the built-in golden table (negative-control fixture).
  std::optional<std::vector<GoldenCase>> golden;
  /// Budgets in seconds; 0 disables.
  double budget_triple = 120;
  double budget_monotone = 180;
};

/// Default options, scaled up when deep.
SelftestOptions selftest_options(bool deep);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // counts on success, first failure's certificate otherwise
  double seconds = 0;
};

/// Shared state: corpus triangulations and pair reports are built once and
/// reused by the criteria that need them.
class Selftest {
 public:
  explicit Selftest(SelftestOptions options);
  ~Selftest();

  CriterionResult triple_agreement();     // 1
  CriterionResult golden_values();        // 2
  CriterionResult monotonicity();         // 3
  CriterionResult h_vector_sandwich();    // 4
  CriterionResult restriction_checks();   // 5
  CriterionResult structural_identities();// 6
  CriterionResult determinism();          // 7

  /// All seven in order.
  std::vector<CriterionResult> run_all();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace deltacheck
