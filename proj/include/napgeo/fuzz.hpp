#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "napgeo/napoleon.hpp"

namespace napgeo::fuzz {

struct FuzzConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t bound = 50;  // numerators in [-bound, bound], denominators in [1, bound]
  unsigned jobs = 1;        // worker threads; output does not depend on it
};

struct TrialFailure {
  std::uint64_t trial = 0;
  Triple triangle;
  std::vector<std::string> failed_claims;
};

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::vector<TrialFailure> failures;  // ordered by trial index
};

// Non-degenerate random triangle for one trial. Depends only on
// (seed, trial, bound); degenerate draws are rejected and redrawn.
Triple random_triangle(std::uint64_t seed, std::uint64_t trial, std::int64_t bound);

// Throws std::invalid_argument if trials or bound are below 1.
FuzzSummary run_fuzz(const FuzzConfig& config);

// "<passed>/<trials> passed" followed by one block per failure.
std::string format_summary(const FuzzSummary& summary);

}  // namespace napgeo::fuzz
