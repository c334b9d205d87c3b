#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cards.hpp"
#include "primitives.hpp"
#include "puzzle.hpp"
#include "shuffle.hpp"
#include "transcript.hpp"

namespace shikaku {

struct Verdict {
    bool accepted = false;
    std::string reason;
};

enum class Phase { first_flood, second_flood };

/// The prover's secret choices during the flooding protocol. Cells are
/// board coordinates (interior cells coincide with puzzle coordinates).
/// Implementations hold private knowledge and may inspect face-down state
/// from inside a PrivateScope; the protocol itself never enforces the
/// honest movement rules, only the public reveals.
class ProverStrategy {
public:
    virtual ~ProverStrategy() = default;
    /// Cell cut at the start of a flood (top-left / bottom-right corner
    /// for the honest prover).
    virtual Cell flood_start(const Board& board, Phase phase, int clue) = 0;
    /// The secret s for one iteration (honest values are 0 or 1; 2 is
    /// caught by the not-2 reveal).
    virtual int choose_s(const Board& board, Phase phase, int clue,
                         int iteration) = 0;
    /// Which matching card to cut in this iteration.
    virtual Cell choose_cut(const Board& board, Phase phase, int clue,
                            int iteration) = 0;
};

/// Prover choices for the sea formation protocol: a start cell, then per
/// iteration a 1-cell to cut and the neighbor direction to flood into.
class SeaStrategy {
public:
    virtual ~SeaStrategy() = default;
    virtual Cell sea_start(const Board& board) = 0;
    virtual std::pair<Cell, Direction> sea_step(const Board& board,
                                                int iteration) = 0;
};

/// One physical table: board, public card piles, the prover's private
/// hand of selector cards, and the growing transcript. A run is strictly
/// sequential; after a rejection the table is left as-is and only the
/// transcript and verdict remain meaningful.
class TableRun {
public:
    TableRun(const Puzzle& puzzle, ShuffleSource& src);

    /// The full flooding protocol: both floods plus the clue-cell reveal,
    /// for every clue in ascending index order.
    Verdict verify(ProverStrategy& strategy);
    /// Same, with an explicit verification order (verdicts must not
    /// depend on it).
    Verdict verify_order(ProverStrategy& strategy, const std::vector<int>& order);

    Verdict first_flood(int clue, ProverStrategy& strategy);
    Verdict second_flood(int clue, ProverStrategy& strategy);
    Verdict clue_check(int clue);

    /// Proves that t cells form a connected area, shape unconstrained.
    Verdict sea_formation(int t, SeaStrategy& strategy);

    const Puzzle& puzzle() const { return puzzle_; }
    const Board& board() const { return board_; }
    CardPool& pool() { return pool_; }
    Transcript& transcript() { return transcript_; }
    const Transcript& transcript() const { return transcript_; }

    /// Multiset of card values across board, piles, discard and the
    /// prover's hand; conserved over a run (audit use).
    std::map<int, int> audit_card_census() const;

private:
    struct OpenCut;  // a board-wide chosen cut in progress

    std::optional<OpenCut> open_board_cut(Cell target, Verdict& verdict,
                                          const std::string& step);
    bool close_board_cut(OpenCut cut, Verdict& verdict, const std::string& step);
    Verdict flood(Phase phase, int clue, ProverStrategy& strategy);
    Verdict sea_formation_steps(int t, SeaStrategy& strategy);
    void claim(int clue, const std::string& phase);

    const Puzzle& puzzle_;
    ShuffleSource& src_;
    CardPool pool_;
    Transcript transcript_;
    Board board_;
    // The prover's reusable face-down selector cards. Returning them to
    // the public piles would reveal their arrangement, so they stay in
    // this private hand between cuts.
    std::vector<Card> hand_;
};

/// Runs verify on a fresh table and returns verdict plus transcript.
struct VerifyResult {
    Verdict verdict;
    Transcript transcript;
};
VerifyResult verify_shikaku(const Puzzle& puzzle, ProverStrategy& strategy,
                            ShuffleSource& src);

/// The deterministic honest strategy derived from a valid partition:
/// first flood walks down the left edge then fills column by column,
/// second flood mirrors it from the bottom-right corner. The protocol
/// permits several fill orders; row_major is an alternative used to check
/// that acceptance does not depend on the canonical choice.
enum class FillOrder { column_major, row_major };

class HonestProver : public ProverStrategy {
public:
    /// strict=true refuses partitions the oracle rejects; strict=false
    /// builds a best-effort plan so an invalid solution can be fed to the
    /// protocol and rejected by the verifier.
    HonestProver(const Puzzle& puzzle, const Partition& partition,
                 bool strict = true, FillOrder order = FillOrder::column_major);

    Cell flood_start(const Board& board, Phase phase, int clue) override;
    int choose_s(const Board& board, Phase phase, int clue, int iteration) override;
    Cell choose_cut(const Board& board, Phase phase, int clue,
                    int iteration) override;

private:
    struct FloodPlan {
        Cell start;
        std::vector<Cell> cuts;  // cut target per iteration
        int direction_change;    // iteration at which s = 1
    };
    const FloodPlan& plan(Phase phase, int clue) const;

    std::map<int, FloodPlan> first_;
    std::map<int, FloodPlan> second_;
};

/// honest_prover per the public operation name; validates the partition.
std::unique_ptr<ProverStrategy> honest_prover(const Puzzle& puzzle,
                                              const Partition& partition);

}  // namespace shikaku
