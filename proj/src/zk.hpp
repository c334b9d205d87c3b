#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "protocol.hpp"
#include "puzzle.hpp"
#include "stats.hpp"
#include "transcript.hpp"

namespace shikaku {

/// Emits a verifier view of an accepting run from public information only
/// (grid size and clue list fix every reveal value; reveal positions are
/// drawn uniformly). Refuses puzzles whose clue values do not sum to mn,
/// where no accepting transcript exists.
Transcript simulate_transcript(const Puzzle& puzzle, ShuffleSource& src);

/// One (class key, position) sample per full-row reveal of a view. The
/// class key combines the reveal's ordinal with its context and width, so
/// histograms from structurally equal runs line up.
struct RevealPosition {
    std::string key;
    int width = 0;
    int position = 0;
};
std::vector<RevealPosition> reveal_positions(const Transcript& view);

/// Depth-first enumeration of every malicious prover strategy the
/// protocol interface admits (all start cells, all s in {0,1}, all cut
/// targets among same-value cards), pruned at verifier rejections.
/// Returns the distinct final board colorings of the accepting paths.
struct EnumerationResult {
    std::set<std::vector<int>> colorings;  // interior values, reading order
    long paths = 0;
    long accepting = 0;
};
EnumerationResult enumerate_accepting_paths(const Puzzle& puzzle,
                                            int max_cells = 6);

/// The coloring a valid partition induces: each interior cell's clue index
/// in reading order. Accepting-path colorings must equal these exactly.
std::vector<int> coloring_of_partition(const Puzzle& puzzle,
                                       const Partition& partition);

/// Left-aligned horizontal bars, lengths top to bottom: the adversarial
/// shape family with a straight left edge.
struct Staircase {
    std::vector<int> lengths;

    int area() const;
    bool is_rectangle() const;
};

/// Runs first floods constrained to produce exactly the staircase, then
/// exhausts every second-flood strategy from that position. A shape the
/// flood cannot even form is reported via flood1_reachable; a rectangle is
/// the only shape that can end accepted.
struct StaircaseOutcome {
    bool flood1_reachable = false;
    bool accepted = false;
    long paths = 0;
};
StaircaseOutcome staircase_attack(const Staircase& shape, int grid_rows,
                                  int grid_cols);

/// The distribution test battery for two valid solutions of
/// the same puzzle: (a) exact equality of canonical reveal sequences
/// (including the simulator's), (b) per-reveal-class chi-square uniformity
/// of the 1-positions and two-sample indistinguishability between the
/// solutions.
struct RevealClassStat {
    std::string key;
    int width = 0;
    std::vector<long> hist_a;
    std::vector<long> hist_b;
    ChiSquareTest uniform_a;
    ChiSquareTest uniform_b;
    ChiSquareTest two_sample;
};

struct ZkReport {
    bool exact_match = false;      // canonical(A) == canonical(B)
    bool simulator_match = false;  // == canonical(simulator)
    double alpha = 0.01;
    int trials = 0;
    std::vector<RevealClassStat> classes;

    bool distributions_pass() const;
    bool all_pass() const {
        return exact_match && simulator_match && distributions_pass();
    }
    nlohmann::json to_json() const;
};

ZkReport zk_distribution_test(const Puzzle& puzzle, const Partition& a,
                              const Partition& b, int trials,
                              std::uint64_t seed, double alpha = 0.01);

/// Enumerates every shuffle-offset tuple of a run and checks that each
/// reveal class's 1-position histogram is exactly flat, not merely
/// statistically so. Only feasible for tiny runs; `max_runs` guards the
/// product of the offset widths.
struct ExactUniformity {
    bool checked = false;
    bool uniform = false;
    long runs = 0;
    int draws = 0;
};
ExactUniformity exact_position_enumeration(const Puzzle& puzzle,
                                           const Partition& partition,
                                           long max_runs = 200000);

/// The acceptance audit: completeness, soundness, zero-knowledge,
/// subprotocol exactness, card count, and determinism, each evaluated at
/// its pinned tolerance on the built-in fixtures.
struct AuditConfig {
    std::uint64_t seed = 20250801;
    int completeness_seeds = 100;
    int zk_trials = 2000;
    double alpha = 0.01;
};

struct AuditCriterion {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    nlohmann::json extra;  // e.g. the per-class chi-square report
};

struct AuditReport {
    std::vector<AuditCriterion> criteria;

    bool all_passed() const;
    std::string table() const;
    nlohmann::json to_json() const;
};

AuditReport run_acceptance_audit(const AuditConfig& config = AuditConfig{});

}  // namespace shikaku
