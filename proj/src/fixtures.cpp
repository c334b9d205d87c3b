#include "fixtures.hpp"

namespace shikaku {

const Puzzle& example_7x7_puzzle() {
    static const Puzzle puzzle = parse_puzzle(
        "7 7\n"
        ". . . . 4 2 2\n"
        "2 . 8 . . . .\n"
        "2 . . . . . 2\n"
        ". . 2 . . . 4\n"
        ". . . . . 3 .\n"
        ". . . 3 2 . .\n"
        "3 . 6 . . 4 .\n");
    return puzzle;
}

const Partition& example_7x7_solution() {
    static const Partition solution = parse_partition(example_7x7_puzzle(),
                                                      "2 1 2 1 5\n"
                                                      "3 1 6 2 6\n"
                                                      "4 1 7 2 7\n"
                                                      "5 1 1 2 1\n"
                                                      "6 2 2 3 5\n"
                                                      "7 3 1 4 1\n"
                                                      "8 3 6 3 7\n"
                                                      "9 4 2 4 3\n"
                                                      "10 4 4 4 7\n"
                                                      "11 5 5 5 7\n"
                                                      "12 5 4 7 4\n"
                                                      "13 6 5 7 5\n"
                                                      "14 5 1 7 1\n"
                                                      "15 5 2 7 3\n"
                                                      "16 6 6 7 7\n");
    return solution;
}

const Puzzle& two_solution_puzzle() {
    static const Puzzle puzzle = parse_puzzle(
        "2 2\n"
        "2 .\n"
        ". 2\n");
    return puzzle;
}

const std::vector<Fixture>& soundness_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        out.push_back({"1x1", parse_puzzle("1 1\n1\n")});
        out.push_back({"2x2_two_solutions", two_solution_puzzle()});
        out.push_back({"2x2_single", parse_puzzle("2 2\n4 .\n. .\n")});
        out.push_back({"2x2_unsatisfiable", parse_puzzle("2 2\n3 .\n. .\n")});
        out.push_back({"1x4_dominoes", parse_puzzle("1 4\n2 . 2 .\n")});
        out.push_back({"2x3_bars", parse_puzzle("2 3\n3 . .\n. . 3\n")});
        out.push_back({"2x3_mixed", parse_puzzle("2 3\n2 . .\n. 4 .\n")});
        out.push_back({"2x3_dominoes", parse_puzzle("2 3\n2 . 2\n. 2 .\n")});
        return out;
    }();
    return fixtures;
}

const std::vector<Fixture>& completeness_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out = soundness_fixtures();
        out.push_back({"3x3_two_solutions", parse_puzzle("3 3\n3 . .\n. . .\n. 6 .\n")});
        out.push_back({"3x5_rows", parse_puzzle("3 5\n5 . . . .\n. . . . 5\n. . 5 . .\n")});
        out.push_back({"4x4_dominoes", parse_puzzle(
                          "4 4\n2 . 2 .\n2 . 2 .\n2 . 2 .\n2 . 2 .\n")});
        out.push_back({"5x5_slabs", parse_puzzle(
                          "5 5\n5 . . . .\n. 10 . . .\n. . . . .\n. . . . .\n. . . 10 .\n")});
        return out;
    }();
    return fixtures;
}

const std::vector<Fixture>& domino_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        out.push_back({"2x2_dominoes", parse_puzzle("2 2\n2 .\n2 .\n")});
        out.push_back({"4x4_dominoes", parse_puzzle(
                          "4 4\n2 . 2 .\n2 . 2 .\n2 . 2 .\n2 . 2 .\n")});
        out.push_back({"8x8_dominoes", [] {
                           std::string text = "8 8\n";
                           for (int r = 0; r < 8; ++r) text += "2 . 2 . 2 . 2 .\n";
                           return parse_puzzle(text);
                       }()});
        return out;
    }();
    return fixtures;
}

}  // namespace shikaku
