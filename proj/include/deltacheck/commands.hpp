#pragma once

// Command bodies shared by the command-line tool and the self-test. Each
// returns the exact stdout text and the exit code.

#include <cstdint>
#include <filesystem>
#include <string>

#include "deltacheck/monotone.hpp"
#include "deltacheck/polytope.hpp"

namespace deltacheck {

struct CommandOutput {
  std::string out;
  int exit_code = 0;
};

enum class DeltaMethod { count, boxes, orbifold, all };

DeltaMethod parse_method(const std::string& name);

CommandOutput cmd_delta(const LatticePolytope& p, DeltaMethod method, std::uint64_t seed);
CommandOutput cmd_hvector(const LatticePolytope& p, std::uint64_t seed);
CommandOutput cmd_decompose(const LatticePolytope& p, std::uint64_t seed);
CommandOutput cmd_orbifold(const LatticePolytope& p, std::uint64_t seed);
CommandOutput cmd_monotone(const LatticePolytope& p, const LatticePolytope& q, std::uint64_t seed,
                           bool with_timing = false);

/// Writes pair_<seed>_<index>.json for index = 0..count-1 into out_dir.
CommandOutput cmd_gen(const PairBounds& bounds, unsigned count, std::uint64_t seed,
                      const std::filesystem::path& out_dir);

/// Contents of the i-th generated pair file.
std::string generated_pair_text(const PairBounds& bounds, std::uint64_t seed, unsigned index);

}  // namespace deltacheck
