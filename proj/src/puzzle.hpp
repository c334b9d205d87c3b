#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shikaku {

/// 1-based grid coordinate, (row, col), row 1 = topmost, col 1 = leftmost.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// A numbered cell. Clue indices start at 2 so the index doubles as the
/// card value used during the second flood.
struct Clue {
    int index = 0;
    Cell cell;
    int value = 0;
};

/// Axis-aligned rectangle given by its top-left and bottom-right cells.
struct Rect {
    Cell top_left;
    Cell bottom_right;

    int height() const { return bottom_right.row - top_left.row + 1; }
    int width() const { return bottom_right.col - top_left.col + 1; }
    int area() const { return height() * width(); }
    bool contains(Cell c) const {
        return top_left.row <= c.row && c.row <= bottom_right.row &&
               top_left.col <= c.col && c.col <= bottom_right.col;
    }

    auto operator<=>(const Rect&) const = default;
};

/// The prover's secret: one rectangle per clue index.
struct Partition {
    std::map<int, Rect> rects;

    auto operator<=>(const Partition&) const = default;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, int line, int col);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Raised when an input exceeds a configured size bound.
class size_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Puzzle {
public:
    /// Validates the instance invariants: positive dimensions, in-bounds
    /// pairwise-distinct clue cells, positive clue values, and clue
    /// indices forming exactly the set {2, ..., k+1}.
    Puzzle(int rows, int cols, std::vector<Clue> clues);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cell_count() const { return rows_ * cols_; }
    const std::vector<Clue>& clues() const { return clues_; }
    int clue_count() const { return static_cast<int>(clues_.size()); }
    const Clue& clue(int index) const;
    bool in_grid(Cell c) const {
        return 1 <= c.row && c.row <= rows_ && 1 <= c.col && c.col <= cols_;
    }
    /// Sum of all clue values; solvable instances have clue_sum == mn.
    int clue_sum() const;

private:
    int rows_;
    int cols_;
    std::vector<Clue> clues_;
};

/// Parses the text puzzle format: a "rows cols" header line followed by
/// `rows` lines of `cols` tokens, "." for empty cells and a decimal value
/// for clues. Clue indices are assigned 2, 3, ... in reading order.
Puzzle parse_puzzle(const std::string& text);
std::string format_puzzle(const Puzzle& puzzle);

/// Parses a solution: one "index row col row' col'" line per clue.
/// Structural problems (unknown or duplicate index, corners out of order
/// or out of the grid) are reported as parse errors.
Partition parse_partition(const Puzzle& puzzle, const std::string& text);
std::string format_partition(const Partition& partition);

/// Oracle verdict for check_solution.
struct CheckResult {
    enum class Code {
        accept,
        clue_outside,   // some rectangle does not contain its clue cell
        area_mismatch,  // some rectangle's area differs from its clue value
        overlap,        // two rectangles intersect
    };
    Code code = Code::accept;
    std::string message;
    bool tiles_grid = false;  // clue_sum == mn, so an accepted partition tiles

    bool accepted() const { return code == Code::accept; }
};

/// Plain-text validity oracle. Accepts iff every clue cell lies in its
/// rectangle, every area matches its clue value, and rectangles are
/// pairwise disjoint. Rejections name the first violated condition and
/// the clue indices involved. The partition must cover exactly the
/// puzzle's clue indices with in-grid rectangles; anything else is a
/// structural error (std::invalid_argument), distinct from a condition
/// failure.
CheckResult check_solution(const Puzzle& puzzle, const Partition& partition);

/// Exhaustive solver used to generate fixtures and soundness oracles.
/// Backtracking over candidate rectangles per clue, smallest candidate
/// set first. Refuses grids larger than max_cells. Results are sorted
/// lexicographically by clue index, then rectangle corners.
std::vector<Partition> solve_brute_force(const Puzzle& puzzle,
                                         std::size_t limit = SIZE_MAX,
                                         int max_cells = 25);

}  // namespace shikaku
