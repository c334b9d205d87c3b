#pragma once

#include <string>
#include <vector>

#include "puzzle.hpp"

namespace shikaku {

/// Built-in instances driving the audit suites and tests.
struct Fixture {
    std::string name;
    Puzzle puzzle;
};

/// A 7x7 instance with a known solution, the largest fixture.
const Puzzle& example_7x7_puzzle();
const Partition& example_7x7_solution();

/// The 2x2 instance with two solutions (row split and column split),
/// the zero-knowledge test's workhorse.
const Puzzle& two_solution_puzzle();

/// Puzzles small enough for exhaustive adversary enumeration (mn <= 6).
const std::vector<Fixture>& soundness_fixtures();

/// Puzzles for the completeness sweep (mn <= 25); the 7x7 instance is
/// covered separately with its known solution.
const std::vector<Fixture>& completeness_fixtures();

/// All-dominoes instances at growing sizes for the card-count bound.
const std::vector<Fixture>& domino_fixtures();

}  // namespace shikaku
