#include "puzzle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shikaku {

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

parse_error::parse_error(std::string message, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

Puzzle::Puzzle(int rows, int cols, std::vector<Clue> clues)
    : rows_(rows), cols_(cols), clues_(std::move(clues)) {
    if (rows_ < 1 || cols_ < 1)
        throw std::invalid_argument("puzzle dimensions must be at least 1x1");
    std::set<Cell> seen_cells;
    std::set<int> seen_indices;
    for (const Clue& c : clues_) {
        if (!in_grid(c.cell))
            throw std::invalid_argument("clue cell " + cell_str(c.cell) +
                                        " outside the grid");
        if (c.value < 1)
            throw std::invalid_argument("clue value must be positive");
        if (!seen_cells.insert(c.cell).second)
            throw std::invalid_argument("duplicate clue cell " + cell_str(c.cell));
        if (!seen_indices.insert(c.index).second)
            throw std::invalid_argument("duplicate clue index " +
                                        std::to_string(c.index));
    }
    // Indices must form exactly {2, ..., k+1} (in any assignment order).
    const int k = clue_count();
    for (int i = 2; i <= k + 1; ++i)
        if (!seen_indices.count(i))
            throw std::invalid_argument("clue indices must form {2..k+1}; missing " +
                                        std::to_string(i));
}

const Clue& Puzzle::clue(int index) const {
    for (const Clue& c : clues_)
        if (c.index == index) return c;
    throw std::invalid_argument("no clue with index " + std::to_string(index));
}

int Puzzle::clue_sum() const {
    int sum = 0;
    for (const Clue& c : clues_) sum += c.value;
    return sum;
}

Puzzle parse_puzzle(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw parse_error("empty puzzle", 1, 1);
    std::istringstream header(line);
    int rows = 0, cols = 0;
    if (!(header >> rows >> cols) || rows < 1 || cols < 1)
        throw parse_error("expected header \"rows cols\"", line_no, 1);
    std::string trailing;
    if (header >> trailing)
        throw parse_error("unexpected token after header: " + trailing, line_no, 1);

    std::vector<Clue> clues;
    int next_index = 2;
    for (int r = 1; r <= rows; ++r) {
        if (!next_line())
            throw parse_error("expected " + std::to_string(rows) +
                                  " grid rows, got " + std::to_string(r - 1),
                              line_no + 1, 1);
        std::istringstream row(line);
        std::string tok;
        for (int c = 1; c <= cols; ++c) {
            if (!(row >> tok))
                throw parse_error("row has fewer than " + std::to_string(cols) +
                                      " cells",
                                  line_no, c);
            if (tok == ".") continue;
            try {
                std::size_t used = 0;
                int value = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                if (value < 1)
                    throw parse_error("clue value must be at least 1", line_no, c);
                clues.push_back({next_index++, {r, c}, value});
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception&) {
                throw parse_error("bad cell token \"" + tok + "\"", line_no, c);
            }
        }
        if (row >> tok)
            throw parse_error("row has more than " + std::to_string(cols) + " cells",
                              line_no, cols + 1);
    }
    if (next_line())
        throw parse_error("unexpected content after grid", line_no, 1);
    return Puzzle(rows, cols, std::move(clues));
}

std::string format_puzzle(const Puzzle& puzzle) {
    std::map<Cell, int> by_cell;
    for (const Clue& c : puzzle.clues()) by_cell[c.cell] = c.value;
    std::ostringstream out;
    out << puzzle.rows() << ' ' << puzzle.cols() << '\n';
    for (int r = 1; r <= puzzle.rows(); ++r) {
        for (int c = 1; c <= puzzle.cols(); ++c) {
            if (c > 1) out << ' ';
            auto it = by_cell.find({r, c});
            if (it == by_cell.end())
                out << '.';
            else
                out << it->second;
        }
        out << '\n';
    }
    return out.str();
}

Partition parse_partition(const Puzzle& puzzle, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Partition partition;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        int index, a, b, a2, b2;
        if (!(row >> index >> a >> b >> a2 >> b2))
            throw parse_error("expected \"index row col row' col'\"", line_no, 1);
        std::string extra;
        if (row >> extra)
            throw parse_error("unexpected token: " + extra, line_no, 1);
        bool known = false;
        for (const Clue& c : puzzle.clues()) known |= (c.index == index);
        if (!known)
            throw parse_error("unknown clue index " + std::to_string(index),
                              line_no, 1);
        Rect rect{{a, b}, {a2, b2}};
        if (a > a2 || b > b2)
            throw parse_error("rectangle corners out of order", line_no, 1);
        if (!puzzle.in_grid(rect.top_left) || !puzzle.in_grid(rect.bottom_right))
            throw parse_error("rectangle outside the grid", line_no, 1);
        if (!partition.rects.emplace(index, rect).second)
            throw parse_error("duplicate clue index " + std::to_string(index),
                              line_no, 1);
    }
    if (partition.rects.size() != puzzle.clues().size())
        throw parse_error("solution must list every clue exactly once",
                          line_no + 1, 1);
    return partition;
}

std::string format_partition(const Partition& partition) {
    std::ostringstream out;
    for (const auto& [index, rect] : partition.rects)
        out << index << ' ' << rect.top_left.row << ' ' << rect.top_left.col << ' '
            << rect.bottom_right.row << ' ' << rect.bottom_right.col << '\n';
    return out.str();
}

CheckResult check_solution(const Puzzle& puzzle, const Partition& partition) {
    // Structural preconditions: exactly the puzzle's clue indices, all
    // rectangles inside the grid with ordered corners.
    if (partition.rects.size() != puzzle.clues().size())
        throw std::invalid_argument("partition must cover exactly the clue indices");
    for (const Clue& c : puzzle.clues()) {
        auto it = partition.rects.find(c.index);
        if (it == partition.rects.end())
            throw std::invalid_argument("partition missing clue index " +
                                        std::to_string(c.index));
        const Rect& z = it->second;
        if (z.top_left.row > z.bottom_right.row ||
            z.top_left.col > z.bottom_right.col)
            throw std::invalid_argument("rectangle corners out of order for index " +
                                        std::to_string(c.index));
        if (!puzzle.in_grid(z.top_left) || !puzzle.in_grid(z.bottom_right))
            throw std::invalid_argument("rectangle out of grid bounds for index " +
                                        std::to_string(c.index));
    }

    CheckResult result;
    result.tiles_grid = (puzzle.clue_sum() == puzzle.cell_count());

    // Condition 1: each clue cell inside its rectangle.
    for (const Clue& c : puzzle.clues()) {
        const Rect& z = partition.rects.at(c.index);
        if (!z.contains(c.cell)) {
            result.code = CheckResult::Code::clue_outside;
            result.message = "condition 1 violated: clue " + std::to_string(c.index) +
                             " at " + cell_str(c.cell) + " lies outside its rectangle";
            return result;
        }
    }
    // Condition 2: area equals the clue value.
    for (const Clue& c : puzzle.clues()) {
        const Rect& z = partition.rects.at(c.index);
        if (z.area() != c.value) {
            result.code = CheckResult::Code::area_mismatch;
            result.message = "condition 2 violated: rectangle " +
                             std::to_string(c.index) + " has area " +
                             std::to_string(z.area()) + ", clue value is " +
                             std::to_string(c.value);
            return result;
        }
    }
    // Condition 3: pairwise disjoint, phrased as the four-way corner
    // disjunction.
    auto disjoint = [](const Rect& zi, const Rect& zj) {
        return zi.bottom_right.row < zj.top_left.row ||
               zj.bottom_right.row < zi.top_left.row ||
               zi.bottom_right.col < zj.top_left.col ||
               zj.bottom_right.col < zi.top_left.col;
    };
    for (auto i = partition.rects.begin(); i != partition.rects.end(); ++i)
        for (auto j = std::next(i); j != partition.rects.end(); ++j)
            if (!disjoint(i->second, j->second)) {
                result.code = CheckResult::Code::overlap;
                result.message = "condition 3 violated: rectangles " +
                                 std::to_string(i->first) + " and " +
                                 std::to_string(j->first) + " overlap";
                return result;
            }

    // Cross-check via an explicit coverage grid; must agree with the
    // pairwise test above.
    std::vector<int> cover(puzzle.cell_count(), 0);
    for (const auto& [index, z] : partition.rects)
        for (int r = z.top_left.row; r <= z.bottom_right.row; ++r)
            for (int c = z.top_left.col; c <= z.bottom_right.col; ++c)
                ++cover[(r - 1) * puzzle.cols() + (c - 1)];
    for (int used : cover)
        if (used > 1)
            throw std::logic_error(
                "coverage grid disagrees with pairwise disjointness");
    if (result.tiles_grid)
        for (int used : cover)
            if (used != 1)
                throw std::logic_error(
                    "disjoint rectangles with matching total area fail to tile");

    result.message = "solution accepted";
    return result;
}

std::vector<Partition> solve_brute_force(const Puzzle& puzzle, std::size_t limit,
                                         int max_cells) {
    if (puzzle.cell_count() > max_cells)
        throw size_error("grid has " + std::to_string(puzzle.cell_count()) +
                         " cells, above the solver bound of " +
                         std::to_string(max_cells));
    if (puzzle.clue_sum() != puzzle.cell_count()) return {};

    // Candidate rectangles per clue: right area, contain the clue cell,
    // stay in the grid, and contain no other clue cell.
    struct ClueCandidates {
        int index;
        std::vector<Rect> rects;
    };
    std::vector<ClueCandidates> order;
    for (const Clue& clue : puzzle.clues()) {
        ClueCandidates cc{clue.index, {}};
        for (int h = 1; h <= clue.value; ++h) {
            if (clue.value % h != 0) continue;
            int w = clue.value / h;
            if (h > puzzle.rows() || w > puzzle.cols()) continue;
            for (int a = std::max(1, clue.cell.row - h + 1);
                 a <= clue.cell.row && a + h - 1 <= puzzle.rows(); ++a) {
                for (int b = std::max(1, clue.cell.col - w + 1);
                     b <= clue.cell.col && b + w - 1 <= puzzle.cols(); ++b) {
                    Rect z{{a, b}, {a + h - 1, b + w - 1}};
                    bool other_clue = false;
                    for (const Clue& o : puzzle.clues())
                        if (o.index != clue.index && z.contains(o.cell))
                            other_clue = true;
                    if (!other_clue) cc.rects.push_back(z);
                }
            }
        }
        order.push_back(std::move(cc));
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const ClueCandidates& a, const ClueCandidates& b) {
                         return a.rects.size() < b.rects.size();
                     });

    std::vector<Partition> found;
    std::vector<int> cover(puzzle.cell_count(), 0);
    Partition current;

    auto fits = [&](const Rect& z) {
        for (int r = z.top_left.row; r <= z.bottom_right.row; ++r)
            for (int c = z.top_left.col; c <= z.bottom_right.col; ++c)
                if (cover[(r - 1) * puzzle.cols() + (c - 1)]) return false;
        return true;
    };
    auto mark = [&](const Rect& z, int delta) {
        for (int r = z.top_left.row; r <= z.bottom_right.row; ++r)
            for (int c = z.top_left.col; c <= z.bottom_right.col; ++c)
                cover[(r - 1) * puzzle.cols() + (c - 1)] += delta;
    };

    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            found.push_back(current);
            return;
        }
        for (const Rect& z : order[depth].rects) {
            if (!fits(z)) continue;
            mark(z, 1);
            current.rects[order[depth].index] = z;
            self(self, depth + 1);
            current.rects.erase(order[depth].index);
            mark(z, -1);
        }
    };
    search(search, 0);

    for (const Partition& p : found) {
        CheckResult check = check_solution(puzzle, p);
        if (!check.accepted() || !check.tiles_grid)
            throw std::logic_error("solver produced a partition the oracle rejects");
    }
    std::sort(found.begin(), found.end());
    if (found.size() > limit) found.resize(limit);
    return found;
}

}  // namespace shikaku
