#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "puzzle.hpp"

using namespace shikaku;

TEST_CASE("parsing the 7x7 example instance") {
    const Puzzle& p = example_7x7_puzzle();
    CHECK(p.rows() == 7);
    CHECK(p.cols() == 7);
    CHECK(p.clue_count() == 15);
    CHECK(p.clue_sum() == 49);
    // Reading order assigns indices from 2.
    CHECK(p.clues().front().index == 2);
    CHECK(p.clues().front().cell == Cell{1, 5});
    CHECK(p.clues().front().value == 4);
    CHECK(p.clues().back().index == 16);
    CHECK(p.clues().back().cell == Cell{7, 6});
}

TEST_CASE("parsing the smallest instance") {
    Puzzle p = parse_puzzle("1 1\n1\n");
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 1);
    CHECK(p.clue_count() == 1);
    CHECK(p.clues().front().value == 1);
}

TEST_CASE("parsing the two-solution 2x2 fixture") {
    const Puzzle& p = two_solution_puzzle();
    CHECK(p.clue_count() == 2);
    CHECK(p.clue_sum() == 4);
    CHECK(solve_brute_force(p).size() == 2);
}

TEST_CASE("parse errors name line and column") {
    CHECK_THROWS_AS(parse_puzzle(""), parse_error);
    CHECK_THROWS_AS(parse_puzzle("0 3\n. . .\n"), parse_error);
    CHECK_THROWS_AS(parse_puzzle("2 2\n. .\n"), parse_error);        // missing row
    CHECK_THROWS_AS(parse_puzzle("1 2\n. . .\n"), parse_error);      // extra cell
    CHECK_THROWS_AS(parse_puzzle("1 2\n.\n"), parse_error);          // short row
    CHECK_THROWS_AS(parse_puzzle("1 1\n0\n"), parse_error);          // value < 1
    CHECK_THROWS_AS(parse_puzzle("1 1\nx\n"), parse_error);          // bad token
    try {
        parse_puzzle("2 2\n. .\n. y\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() == 2);
    }
}

TEST_CASE("puzzle and partition text round-trips") {
    std::string text = format_puzzle(example_7x7_puzzle());
    Puzzle reparsed = parse_puzzle(text);
    CHECK(format_puzzle(reparsed) == text);

    std::string sol = format_partition(example_7x7_solution());
    Partition back = parse_partition(example_7x7_puzzle(), sol);
    CHECK(back == example_7x7_solution());
}

TEST_CASE("oracle accepts the published solution") {
    CheckResult r = check_solution(example_7x7_puzzle(), example_7x7_solution());
    CHECK(r.accepted());
    CHECK(r.tiles_grid);
}

TEST_CASE("oracle accepts the 1x1 instance") {
    Puzzle p = parse_puzzle("1 1\n1\n");
    Partition sol = parse_partition(p, "2 1 1 1 1\n");
    CHECK(check_solution(p, sol).accepted());
}

TEST_CASE("oracle rejects a rectangle shifted off its clue, condition 1") {
    // Swap the rectangles of clues 3 and 4 (both area 2, adjacent columns):
    // still a perfect tiling, but each misses its own clue cell.
    Partition mutated = example_7x7_solution();
    std::swap(mutated.rects.at(3), mutated.rects.at(4));
    CheckResult r = check_solution(example_7x7_puzzle(), mutated);
    CHECK_FALSE(r.accepted());
    CHECK(r.code == CheckResult::Code::clue_outside);
    CHECK(r.message.find("condition 1") != std::string::npos);
}

TEST_CASE("oracle rejects area and overlap violations in order") {
    const Puzzle& p = two_solution_puzzle();  // clues 2@(1,1), 2@(2,2)
    Partition bad;
    bad.rects[2] = {{1, 1}, {2, 2}};  // area 4 != 2
    bad.rects[3] = {{2, 2}, {2, 2}};  // area 1 != 2, also overlapping
    CheckResult r = check_solution(p, bad);
    CHECK_FALSE(r.accepted());
    CHECK(r.code == CheckResult::Code::area_mismatch);

    Partition overlap;
    overlap.rects[2] = {{1, 1}, {1, 2}};
    overlap.rects[3] = {{1, 2}, {2, 2}};  // overlaps at (1,2), right area
    CheckResult r2 = check_solution(p, overlap);
    CHECK_FALSE(r2.accepted());
    CHECK(r2.code == CheckResult::Code::overlap);
    CHECK(r2.message.find("condition 3") != std::string::npos);
}

TEST_CASE("structural problems are distinct from condition failures") {
    const Puzzle& p = two_solution_puzzle();
    Partition out_of_grid;
    out_of_grid.rects[2] = {{1, 1}, {1, 2}};
    out_of_grid.rects[3] = {{2, 2}, {2, 3}};  // col 3 beyond a 2x2 grid
    CHECK_THROWS_AS(check_solution(p, out_of_grid), std::invalid_argument);

    Partition missing;
    missing.rects[2] = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(check_solution(p, missing), std::invalid_argument);
}

TEST_CASE("solver finds exactly the expected partitions") {
    SUBCASE("1x1 has one") {
        CHECK(solve_brute_force(parse_puzzle("1 1\n1\n")).size() == 1);
    }
    SUBCASE("2x2 with opposite clues has the row and column splits") {
        std::vector<Partition> sols = solve_brute_force(two_solution_puzzle());
        REQUIRE(sols.size() == 2);
        Partition rows, cols;
        rows.rects[2] = {{1, 1}, {1, 2}};
        rows.rects[3] = {{2, 1}, {2, 2}};
        cols.rects[2] = {{1, 1}, {2, 1}};
        cols.rects[3] = {{1, 2}, {2, 2}};
        CHECK(std::count(sols.begin(), sols.end(), rows) == 1);
        CHECK(std::count(sols.begin(), sols.end(), cols) == 1);
    }
    SUBCASE("clue sum mismatch means no tiling") {
        CHECK(solve_brute_force(parse_puzzle("2 2\n3 .\n. .\n")).empty());
    }
    SUBCASE("limit truncates deterministically") {
        std::vector<Partition> all = solve_brute_force(two_solution_puzzle());
        std::vector<Partition> one = solve_brute_force(two_solution_puzzle(), 1);
        REQUIRE(one.size() == 1);
        CHECK(one[0] == all[0]);
    }
}

TEST_CASE("solver refuses oversized grids") {
    std::string big = "6 5\n";  // 30 cells > default bound of 25
    for (int r = 0; r < 6; ++r) big += "5 . . . .\n";
    CHECK_THROWS_AS(solve_brute_force(parse_puzzle(big)), size_error);
    CHECK(solve_brute_force(parse_puzzle(big), SIZE_MAX, 30).size() == 1);
}

TEST_CASE("every solver partition passes the oracle and tiles the grid") {
    for (const Fixture& f : completeness_fixtures()) {
        for (const Partition& p : solve_brute_force(f.puzzle)) {
            CheckResult r = check_solution(f.puzzle, p);
            CHECK(r.accepted());
            CHECK(r.tiles_grid);
            int area = 0;
            for (const auto& [index, rect] : p.rects) area += rect.area();
            CHECK(area == f.puzzle.cell_count());
        }
    }
}

TEST_CASE("verdicts are invariant under consistent index relabeling") {
    // Swap the labels of two clues in both puzzle and partition; the
    // oracle must not care which clue got which index.
    std::mt19937 gen(7);
    for (int round = 0; round < 20; ++round) {
        const Puzzle& base = example_7x7_puzzle();
        std::vector<Clue> clues = base.clues();
        std::uniform_int_distribution<std::size_t> pick(0, clues.size() - 1);
        std::size_t a = pick(gen), b = pick(gen);
        std::swap(clues[a].index, clues[b].index);
        Puzzle relabeled(base.rows(), base.cols(), clues);

        Partition solution = example_7x7_solution();
        Partition permuted;
        for (const Clue& original : base.clues()) {
            int new_index = original.index;
            for (const Clue& c : clues)
                if (c.cell == original.cell) new_index = c.index;
            permuted.rects[new_index] = solution.rects.at(original.index);
        }
        CHECK(check_solution(relabeled, permuted).accepted());
    }
}
