#pragma once

// Exhaustive and randomized identity checks over the whole library. Backs the
// `verify` subcommand.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qholonomy/geometry.hpp"

namespace qholo {

struct RandomPathOptions {
  int max_segments = 8;
  long coordinate_bound = 4;  // vertices in [-bound, bound]^2
  long max_denominator = 4;   // interior vertices are rationals with small denominators
};

/// A PL path from the origin to `end` whose interior vertices are random.
PLPath random_path_to(std::mt19937_64& rng, const RatPoint& end, const RandomPathOptions& opts = {});

/// A random integer endpoint in the bounding box and a path to it.
PLPath random_lattice_path(std::mt19937_64& rng, const RandomPathOptions& opts = {});

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  long sweep = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

/// Runs every suite. Integer sweeps cover entries in [-sweep, sweep]; the
/// Jacobi sweep is capped at 3. Randomized suites use `seed`.
VerifyReport run_verification(long sweep, std::uint64_t seed = 20041201, int random_cases = 200);

}  // namespace qholo
