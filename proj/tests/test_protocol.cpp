#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "protocol.hpp"
#include "zk.hpp"

using namespace shikaku;

namespace {

int count_reveals(const Transcript& t, const std::string& context) {
    int n = 0;
    for (const Event& e : t.events())
        if (e.type == EventType::reveal && e.context == context) ++n;
    return n;
}

// Scripted sea strategy for the small fixtures.
class ScriptedSea : public SeaStrategy {
public:
    Cell start;
    std::vector<std::pair<Cell, Direction>> steps;

    Cell sea_start(const Board&) override { return start; }
    std::pair<Cell, Direction> sea_step(const Board&, int iteration) override {
        return steps.at(iteration - 1);
    }
};

}  // namespace

TEST_CASE("the 7x7 instance verifies with its published solution") {
    HonestProver prover(example_7x7_puzzle(), example_7x7_solution());
    ShuffleSource src = ShuffleSource::seeded(7);
    VerifyResult result = verify_shikaku(example_7x7_puzzle(), prover, src);
    CHECK(result.verdict.accepted);
    CHECK(result.transcript.verdict() == "accept");
}

TEST_CASE("a 1x1 run is two board cuts plus one clue reveal") {
    Puzzle puzzle = parse_puzzle("1 1\n1\n");
    Partition solution = parse_partition(puzzle, "2 1 1 1 1\n");
    HonestProver prover(puzzle, solution);
    ShuffleSource src = ShuffleSource::seeded(3);
    VerifyResult result = verify_shikaku(puzzle, prover, src);
    CHECK(result.verdict.accepted);
    CHECK(count_reveals(result.transcript, "cut_row2") == 2);
    CHECK(count_reveals(result.transcript, "cut_row3") == 2);
    CHECK(count_reveals(result.transcript, "clue_cell") == 1);
    CHECK(count_reveals(result.transcript, "cut_card") == 0);
}

TEST_CASE("honest direction-change timing") {
    SUBCASE("a 3x1 rectangle never changes direction") {
        Puzzle puzzle = parse_puzzle("3 1\n3\n. \n.\n");
        Partition solution = parse_partition(puzzle, "2 1 1 3 1\n");
        HonestProver prover(puzzle, solution);
        ShuffleSource probe = ShuffleSource::seeded(0);
        TableRun scratch(puzzle, probe);
        CHECK(prover.choose_s(scratch.board(), Phase::first_flood, 2, 1) == 0);
        CHECK(prover.choose_s(scratch.board(), Phase::first_flood, 2, 2) == 0);
        ShuffleSource src = ShuffleSource::seeded(11);
        CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
    }
    SUBCASE("a 1x3 rectangle changes direction at the first iteration") {
        Puzzle puzzle = parse_puzzle("1 3\n3 . .\n");
        Partition solution = parse_partition(puzzle, "2 1 1 1 3\n");
        HonestProver prover(puzzle, solution);
        ShuffleSource probe = ShuffleSource::seeded(0);
        TableRun scratch(puzzle, probe);
        CHECK(prover.choose_s(scratch.board(), Phase::first_flood, 2, 1) == 1);
        CHECK(prover.choose_s(scratch.board(), Phase::first_flood, 2, 2) == 0);
        ShuffleSource src = ShuffleSource::seeded(11);
        CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
    }
}

TEST_CASE("honest canonical fill of a 2x3 rectangle") {
    Puzzle puzzle = parse_puzzle("2 3\n6 . .\n. . .\n");
    Partition solution = parse_partition(puzzle, "2 1 1 2 3\n");
    HonestProver prover(puzzle, solution);
    ShuffleSource probe = ShuffleSource::seeded(0);
    TableRun scratch(puzzle, probe);
    const Board& board = scratch.board();
    // s-sequence (0,1,0,0,0); cut targets walk the left edge then the
    // rightmost 1 of each row, column by column.
    std::vector<int> s_seq;
    std::vector<Cell> cuts;
    for (int it = 1; it <= 5; ++it) {
        s_seq.push_back(prover.choose_s(board, Phase::first_flood, 2, it));
        cuts.push_back(prover.choose_cut(board, Phase::first_flood, 2, it));
    }
    CHECK(s_seq == std::vector<int>{0, 1, 0, 0, 0});
    CHECK(cuts == std::vector<Cell>{{1, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(prover.flood_start(board, Phase::first_flood, 2) == Cell{1, 1});
    CHECK(prover.flood_start(board, Phase::second_flood, 2) == Cell{2, 3});

    ShuffleSource src = ShuffleSource::seeded(5);
    CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
}

TEST_CASE("honest second flood of a 2x2 rectangle") {
    Puzzle puzzle = parse_puzzle("2 2\n4 .\n. .\n");
    Partition solution = parse_partition(puzzle, "2 1 1 2 2\n");
    HonestProver prover(puzzle, solution);
    ShuffleSource probe = ShuffleSource::seeded(0);
    TableRun scratch(puzzle, probe);
    const Board& board = scratch.board();
    // Upwards along the right edge first, then leftwards: s = (0,1,0),
    // cutting the topmost 2 and then expanding left.
    std::vector<int> s_seq;
    std::vector<Cell> cuts;
    for (int it = 1; it <= 3; ++it) {
        s_seq.push_back(prover.choose_s(board, Phase::second_flood, 2, it));
        cuts.push_back(prover.choose_cut(board, Phase::second_flood, 2, it));
    }
    CHECK(s_seq == std::vector<int>{0, 1, 0});
    CHECK(prover.flood_start(board, Phase::second_flood, 2) == Cell{2, 2});
    CHECK(cuts == std::vector<Cell>{{2, 2}, {2, 2}, {1, 2}});
    ShuffleSource src = ShuffleSource::seeded(19);
    CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
}

TEST_CASE("every rectangle shape with area up to 6 verifies honestly") {
    for (int h = 1; h <= 6; ++h) {
        for (int w = 1; h * w <= 6; ++w) {
            std::string text = std::to_string(h) + " " + std::to_string(w) + "\n";
            for (int r = 0; r < h; ++r) {
                for (int c = 0; c < w; ++c) {
                    text += (r == 0 && c == 0) ? std::to_string(h * w) : ".";
                    if (c + 1 < w) text += " ";
                }
                text += "\n";
            }
            Puzzle puzzle = parse_puzzle(text);
            Partition solution;
            solution.rects[2] = {{1, 1}, {h, w}};
            for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
                HonestProver prover(puzzle, solution);
                ShuffleSource src = ShuffleSource::seeded(seed);
                CAPTURE(h);
                CAPTURE(w);
                CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
            }
        }
    }
}

TEST_CASE("the alternative row-major fill order also verifies") {
    Puzzle puzzle = parse_puzzle("2 3\n6 . .\n. . .\n");
    Partition solution = parse_partition(puzzle, "2 1 1 2 3\n");
    HonestProver prover(puzzle, solution, true, FillOrder::row_major);
    ShuffleSource src = ShuffleSource::seeded(17);
    CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
}

TEST_CASE("verification order does not change the verdict") {
    const Puzzle& puzzle = two_solution_puzzle();
    Partition solution = solve_brute_force(puzzle).front();
    for (std::vector<int> order : {std::vector<int>{2, 3}, {3, 2}}) {
        HonestProver prover(puzzle, solution);
        ShuffleSource src = ShuffleSource::seeded(23);
        TableRun run(puzzle, src);
        CHECK(run.verify_order(prover, order).accepted);
    }
}

TEST_CASE("a tiling that misses a clue cell is rejected at the clue reveal") {
    Partition mutated = example_7x7_solution();
    std::swap(mutated.rects.at(3), mutated.rects.at(4));  // both area 2
    HonestProver prover(example_7x7_puzzle(), mutated, /*strict=*/false);
    ShuffleSource src = ShuffleSource::seeded(29);
    VerifyResult result = verify_shikaku(example_7x7_puzzle(), prover, src);
    CHECK_FALSE(result.verdict.accepted);
    CHECK(result.verdict.reason.find("clue cell") != std::string::npos);
}

TEST_CASE("the strict honest prover refuses invalid partitions") {
    Partition mutated = example_7x7_solution();
    std::swap(mutated.rects.at(3), mutated.rects.at(4));
    CHECK_THROWS_AS(HonestProver(example_7x7_puzzle(), mutated), std::invalid_argument);
    CHECK_THROWS_AS(honest_prover(example_7x7_puzzle(), mutated), std::invalid_argument);
}

TEST_CASE("accepted board state matches the partition's coloring") {
    const Puzzle& puzzle = two_solution_puzzle();
    for (const Partition& solution : solve_brute_force(puzzle)) {
        HonestProver prover(puzzle, solution);
        ShuffleSource src = ShuffleSource::seeded(31);
        TableRun run(puzzle, src);
        REQUIRE(run.verify(prover).accepted);
        CHECK(run.board().covert_interior_values() ==
              coloring_of_partition(puzzle, solution));
    }
}

TEST_CASE("card values are conserved through a full run") {
    const Puzzle& puzzle = two_solution_puzzle();
    Partition solution = solve_brute_force(puzzle).front();
    ShuffleSource src = ShuffleSource::seeded(37);
    TableRun run(puzzle, src);
    std::map<int, int> before = run.audit_card_census();
    HonestProver prover(puzzle, solution);
    REQUIRE(run.verify(prover).accepted);
    CHECK(run.audit_card_census() == before);

    // And the census equals the inventory.
    Inventory inv = inventory(puzzle);
    std::map<int, int> expected = inv.per_value;
    CHECK(before == expected);
}

TEST_CASE("the audit log shows the one-time direction change") {
    // Reconstruct each flood's r-sequence from the secret S placements:
    // r is the running sum and must be non-decreasing within {0, 1} on an
    // accepting run.
    HonestProver prover(example_7x7_puzzle(), example_7x7_solution());
    ShuffleSource src = ShuffleSource::seeded(41);
    VerifyResult result = verify_shikaku(example_7x7_puzzle(), prover, src);
    REQUIRE(result.verdict.accepted);
    int r = 0;
    bool in_flood = false;
    for (const Event& e : result.transcript.events()) {
        if (e.type == EventType::claim) {
            r = 0;
            in_flood = true;
            continue;
        }
        if (!in_flood || e.type != EventType::place_secret || e.context != "S")
            continue;
        REQUIRE(e.secret_values.size() == 3);
        int s = -1;
        for (int i = 0; i < 3; ++i)
            if (e.secret_values[i] == 1) s = i;
        REQUIRE(s >= 0);
        int next = r + s;
        CHECK(next >= r);      // never decreases
        CHECK(next <= 1);      // and never exceeds 1 in an accepting run
        r = next;
    }
}

TEST_CASE("the flood grows one connected interior cell at a time") {
    // Replay the audit trail of replacements: the 1-region must grow by
    // one interior cell per replacement and stay connected.
    Puzzle puzzle = parse_puzzle("2 3\n6 . .\n. . .\n");
    Partition solution = parse_partition(puzzle, "2 1 1 2 3\n");
    HonestProver prover(puzzle, solution);
    ShuffleSource src = ShuffleSource::seeded(43);
    VerifyResult result = verify_shikaku(puzzle, prover, src);
    REQUIRE(result.verdict.accepted);

    BoardGeometry geom{puzzle.rows(), puzzle.cols()};
    std::set<int> ones;
    for (const Event& e : result.transcript.events()) {
        if (e.type != EventType::replace || e.new_value != 1) continue;
        REQUIRE(e.audit_cell.has_value());
        int cell = *e.audit_cell;
        CHECK(geom.interior_linear(cell));
        if (!ones.empty()) {
            bool adjacent = false;
            for (Direction d : {Direction::left, Direction::right,
                                Direction::top, Direction::bottom})
                adjacent |= ones.count(neighbor_index(cell, d, geom)) > 0;
            CHECK(adjacent);
        }
        CHECK(ones.insert(cell).second);  // strictly growing
    }
    CHECK(ones.size() == 6);
}

TEST_CASE("sea formation") {
    Puzzle puzzle = two_solution_puzzle();  // any 2x2 board

    SUBCASE("t=1 is a single cut and replacement") {
        ShuffleSource src = ShuffleSource::seeded(47);
        TableRun run(puzzle, src);
        ScriptedSea sea;
        sea.start = {1, 1};
        CHECK(run.sea_formation(1, sea).accepted);
    }
    SUBCASE("an L-tromino is accepted: connectivity without rectangularity") {
        ShuffleSource src = ShuffleSource::seeded(53);
        TableRun run(puzzle, src);
        ScriptedSea sea;
        sea.start = {1, 1};
        sea.steps = {{{1, 1}, Direction::bottom}, {{2, 1}, Direction::right}};
        CHECK(run.sea_formation(3, sea).accepted);
    }
    SUBCASE("stepping onto the border reveals a dummy and rejects") {
        ShuffleSource src = ShuffleSource::seeded(59);
        TableRun run(puzzle, src);
        ScriptedSea sea;
        sea.start = {1, 1};
        sea.steps = {{{1, 1}, Direction::top}};
        Verdict verdict = run.sea_formation(2, sea);
        CHECK_FALSE(verdict.accepted);
        CHECK(verdict.reason.find("-1") != std::string::npos);
    }
    SUBCASE("a disconnected target cell cannot be reached") {
        ShuffleSource src = ShuffleSource::seeded(61);
        TableRun run(puzzle, src);
        ScriptedSea sea;
        sea.start = {1, 1};
        // (2,2) is not adjacent to (1,1); the strategy must name a 1-cell
        // and a direction, and no direction from (1,1) reaches (2,2).
        sea.steps = {{{2, 2}, Direction::left}};
        Verdict verdict = run.sea_formation(2, sea);
        CHECK_FALSE(verdict.accepted);
    }
}

TEST_CASE("malicious cut targets are caught by the reveals") {
    struct Scripted : ProverStrategy {
        Cell start{0, 0};  // a border dummy
        Cell flood_start(const Board&, Phase, int) override { return start; }
        int choose_s(const Board&, Phase, int, int) override { return 0; }
        Cell choose_cut(const Board&, Phase, int, int) override { return start; }
    };
    Puzzle puzzle = parse_puzzle("2 2\n4 .\n. .\n");

    SUBCASE("starting on the border reveals a dummy") {
        Scripted prover;
        ShuffleSource src = ShuffleSource::seeded(71);
        VerifyResult result = verify_shikaku(puzzle, prover, src);
        CHECK_FALSE(result.verdict.accepted);
        CHECK(result.verdict.reason.find("revealed -1") != std::string::npos);
    }
    SUBCASE("driving the flood into itself fails a neighbor reveal") {
        Scripted prover;
        prover.start = {1, 1};  // cut (1,1) forever: its bottom turns 1
        ShuffleSource src = ShuffleSource::seeded(73);
        VerifyResult result = verify_shikaku(puzzle, prover, src);
        CHECK_FALSE(result.verdict.accepted);
        CHECK(result.verdict.reason.find("neighbor") != std::string::npos);
    }
}

TEST_CASE("a dishonest s = 2 is caught by the rightmost-card reveal") {
    class DishonestS : public HonestProver {
    public:
        using HonestProver::HonestProver;
        int choose_s(const Board& b, Phase p, int clue, int it) override {
            (void)b;
            (void)p;
            (void)clue;
            (void)it;
            return 2;
        }
    };
    Puzzle puzzle = parse_puzzle("1 2\n2 .\n");
    Partition solution = parse_partition(puzzle, "2 1 1 1 2\n");
    DishonestS prover(puzzle, solution);
    ShuffleSource src = ShuffleSource::seeded(67);
    VerifyResult result = verify_shikaku(puzzle, prover, src);
    CHECK_FALSE(result.verdict.accepted);
    CHECK(result.verdict.reason.find("s = 2") != std::string::npos);
}

TEST_CASE("random rectangle tilings all verify") {
    // Generate instances by recursive random splitting, place each clue
    // at a random cell of its rectangle, and run the protocol.
    std::mt19937 gen(2024);
    auto coin = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    };
    for (int round = 0; round < 25; ++round) {
        int m = coin(1, 5), n = coin(1, 5);
        std::vector<Rect> rects{{{1, 1}, {m, n}}};
        for (std::size_t i = 0; i < rects.size();) {
            Rect r = rects[i];
            bool can_h = r.height() > 1, can_v = r.width() > 1;
            if ((!can_h && !can_v) || coin(0, 2) == 0) {
                ++i;
                continue;
            }
            bool horizontal = can_h && (!can_v || coin(0, 1) == 0);
            if (horizontal) {
                int split = coin(r.top_left.row, r.bottom_right.row - 1);
                rects[i] = {r.top_left, {split, r.bottom_right.col}};
                rects.push_back({{split + 1, r.top_left.col}, r.bottom_right});
            } else {
                int split = coin(r.top_left.col, r.bottom_right.col - 1);
                rects[i] = {r.top_left, {r.bottom_right.row, split}};
                rects.push_back({{r.top_left.row, split + 1}, r.bottom_right});
            }
        }
        // Clue cells in reading order get indices 2, 3, ...
        std::vector<std::pair<Cell, const Rect*>> picks;
        for (const Rect& r : rects)
            picks.push_back({{coin(r.top_left.row, r.bottom_right.row),
                              coin(r.top_left.col, r.bottom_right.col)},
                             &r});
        std::sort(picks.begin(), picks.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Clue> clues;
        Partition solution;
        int index = 2;
        for (const auto& [cell, rect] : picks) {
            clues.push_back({index, cell, rect->area()});
            solution.rects[index] = *rect;
            ++index;
        }
        Puzzle puzzle(m, n, clues);
        CAPTURE(format_puzzle(puzzle));
        REQUIRE(check_solution(puzzle, solution).accepted());
        HonestProver prover(puzzle, solution);
        ShuffleSource src = ShuffleSource::seeded(9000 + round);
        CHECK(verify_shikaku(puzzle, prover, src).verdict.accepted);
    }
}

TEST_CASE("verdicts do not depend on shuffle offsets") {
    // Every small fixture, every solution, under fixed offset scripts:
    // perfect completeness cannot hinge on where the shuffles land.
    for (const Fixture& f : soundness_fixtures()) {
        for (const Partition& solution : solve_brute_force(f.puzzle)) {
            CAPTURE(f.name);
            for (int offset : {0, 1}) {
                HonestProver prover(f.puzzle, solution);
                ShuffleSource src = ShuffleSource::constant(offset);
                CHECK(verify_shikaku(f.puzzle, prover, src).verdict.accepted);
            }
            for (int stride : {1, 3, 7}) {
                HonestProver prover(f.puzzle, solution);
                ShuffleSource src = ShuffleSource::cycling(stride);
                CHECK(verify_shikaku(f.puzzle, prover, src).verdict.accepted);
            }
        }
    }
}
