#include "protocol.hpp"

#include <algorithm>

namespace shikaku {

namespace {

std::string step_name(Phase phase, int clue, int iteration = 0) {
    std::string s = (phase == Phase::first_flood ? "first flood" : "second flood");
    s += " of clue " + std::to_string(clue);
    if (iteration > 0) s += ", iteration " + std::to_string(iteration);
    return s;
}

}  // namespace

struct TableRun::OpenCut {
    ChosenCut cut;
};

TableRun::TableRun(const Puzzle& puzzle, ShuffleSource& src)
    : puzzle_(puzzle),
      src_(src),
      pool_(CardPool::for_puzzle(puzzle)),
      board_(puzzle, pool_, transcript_) {
    // One big indicator row plus the widest inner row (four neighbors).
    const int big = board_.geometry().size();
    hand_.push_back(pool_.take(1));
    for (int i = 0; i < big - 1; ++i) hand_.push_back(pool_.take(0));
    hand_.push_back(pool_.take(1));
    for (int i = 0; i < 3; ++i) hand_.push_back(pool_.take(0));
}

std::map<int, int> TableRun::audit_card_census() const {
    PrivateScope audit;
    std::map<int, int> counts = pool_.audit_holdings();
    for (const auto& [value, count] : board_.covert_value_counts())
        counts[value] += count;
    for (const Card& c : hand_) counts[c.covert_value()] += 1;
    return counts;
}

void TableRun::claim(int clue, const std::string& phase) {
    Event e;
    e.type = EventType::claim;
    e.clue = clue;
    e.context = phase;
    transcript_.add(std::move(e));
}

// Draws `width` cards from the private hand arranged as an indicator row
// with the 1 at `secret_pos`. Prover-marked code.
static std::vector<Card> arrange_indicator(std::vector<Card>& hand, int width,
                                           int secret_pos) {
    PrivateScope prover;
    std::vector<Card> row(width);
    std::vector<bool> used(hand.size(), false);
    bool one_placed = false;
    for (int i = 0; i < width; ++i) {
        int want = (i == secret_pos) ? 1 : 0;
        bool found = false;
        for (std::size_t h = 0; h < hand.size(); ++h) {
            if (!used[h] && hand[h].covert_value() == want) {
                row[i] = hand[h];
                used[h] = true;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("prover hand exhausted");
        one_placed |= (want == 1);
    }
    if (!one_placed) throw std::logic_error("indicator position out of range");
    std::vector<Card> rest;
    for (std::size_t h = 0; h < hand.size(); ++h)
        if (!used[h]) rest.push_back(hand[h]);
    hand = std::move(rest);
    return row;
}

static void return_to_hand(std::vector<Card>& hand, std::vector<Card> cards) {
    for (Card& c : cards) {
        c.hide();
        hand.push_back(c);
    }
}

std::optional<TableRun::OpenCut> TableRun::open_board_cut(Cell target,
                                                          Verdict& verdict,
                                                          const std::string& step) {
    const BoardGeometry& geom = board_.geometry();
    if (target.row < 0 || target.row >= geom.rows() || target.col < 0 ||
        target.col >= geom.cols())
        throw std::invalid_argument("cut target outside the board");
    int secret_col = geom.linear_of_cell(target) - 1;
    std::vector<Card> selector = arrange_indicator(hand_, geom.size(), secret_col);
    std::string error;
    auto cut = ChosenCut::open(board_.take_all(), std::move(selector), pool_,
                               transcript_, src_, &error);
    if (!cut) {
        verdict = {false, step + ": " + error};
        return std::nullopt;
    }
    return OpenCut{std::move(*cut)};
}

bool TableRun::close_board_cut(OpenCut open, Verdict& verdict,
                               const std::string& step) {
    std::string error;
    auto closed = open.cut.close(pool_, transcript_, src_, &error);
    if (!closed) {
        verdict = {false, step + ": " + error};
        return false;
    }
    board_.put_all(std::move(closed->sequence));
    return_to_hand(hand_, std::move(closed->selector));
    return true;
}

Verdict TableRun::flood(Phase phase, int clue, ProverStrategy& strategy) {
    const int p = puzzle_.clue(clue).value;
    const bool first = (phase == Phase::first_flood);
    const int start_value = first ? 0 : 1;
    const int grow_value = first ? 1 : clue;
    claim(clue, first ? "first_flood" : "second_flood");

    Verdict verdict;

    // Steps 1-2: cut the corner card, check it, swap in the new value.
    Cell start = strategy.flood_start(board_, phase, clue);
    auto cut = open_board_cut(start, verdict, step_name(phase, clue) + " start");
    if (!cut) return verdict;
    int v = cut->cut.reveal_selected("start_card", transcript_);
    if (v != start_value)
        return {false, step_name(phase, clue) + " start: revealed " +
                           std::to_string(v) + ", expected " +
                           std::to_string(start_value)};
    cut->cut.replace_selected(grow_value, pool_, transcript_);
    if (!close_board_cut(std::move(*cut), verdict,
                         step_name(phase, clue) + " start"))
        return verdict;

    // Step 3: R starts at 0, publicly.
    EncodedInt direction = assemble_encoding(pool_, 0, 3);
    Event r_event;
    r_event.type = EventType::place_public;
    r_event.context = "R";
    r_event.count = 3;
    r_event.one_at = 0;
    transcript_.add(std::move(r_event));

    // Step 4: p-1 growth iterations.
    for (int it = 1; it <= p - 1; ++it) {
        const std::string where = step_name(phase, clue, it);

        int s = strategy.choose_s(board_, phase, clue, it);
        if (s < 0 || s > 2)
            throw std::invalid_argument("strategy returned s outside {0,1,2}");
        // The prover draws one 1 and two 0s from the public piles and
        // arranges them in private.
        EncodedInt addend;
        addend.modulus = 3;
        {
            Card one = pool_.take(1);
            Card zero_a = pool_.take(0);
            Card zero_b = pool_.take(0);
            addend.cards.assign(3, Card());
            int zeros_used = 0;
            for (int pos = 0; pos < 3; ++pos)
                addend.cards[pos] =
                    (pos == s) ? one : (zeros_used++ == 0 ? zero_a : zero_b);
        }
        Event s_event;
        s_event.type = EventType::place_secret;
        s_event.context = "S";
        s_event.count = 3;
        {
            PrivateScope audit;
            for (const Card& c : addend.cards)
                s_event.secret_values.push_back(c.covert_value());
        }
        transcript_.add(std::move(s_event));

        if (!reveal_rightmost_is_zero(addend, "s_tail", transcript_))
            return {false, where + ": s = 2 disclosed by the rightmost card"};

        std::string error;
        auto sum = add_mod3(std::move(direction), std::move(addend), pool_,
                            transcript_, src_, &error);
        if (!sum) return {false, where + ": " + error};
        direction = std::move(*sum);
        if (!reveal_rightmost_is_zero(direction, "sum_tail", transcript_))
            return {false, where + ": r + s = 2 disclosed by the rightmost card"};

        Cell target = strategy.choose_cut(board_, phase, clue, it);
        cut = open_board_cut(target, verdict, where);
        if (!cut) return verdict;
        v = cut->cut.reveal_selected("cut_card", transcript_);
        if (v != grow_value)
            return {false, where + ": cut revealed " + std::to_string(v) +
                               ", expected " + std::to_string(grow_value)};

        // Neighbor selection: c0/c1 are (bottom, right) in the first flood
        // and (top, left) in the second.
        Direction d0 = first ? Direction::bottom : Direction::top;
        Direction d1 = first ? Direction::right : Direction::left;
        int col0 = cut->cut.col_at_offset(neighbor_offset(d0, board_.geometry()));
        int col1 = cut->cut.col_at_offset(neighbor_offset(d1, board_.geometry()));
        std::vector<Card> pair = cut->cut.extract({col0, col1});
        EncodedInt two = truncate_to_mod2(direction);
        auto inner = neighbor_selection(
            pair[0], pair[1], std::move(two), pool_, transcript_, src_, &error,
            {cut->cut.source_label(col0), cut->cut.source_label(col1)});
        if (!inner) return {false, where + ": " + error};
        v = inner->reveal_selected("neighbor_card", transcript_);
        if (v != start_value)
            return {false, where + ": neighbor revealed " + std::to_string(v) +
                               ", expected " + std::to_string(start_value)};
        inner->replace_selected(grow_value, pool_, transcript_);
        auto inner_closed = inner->close(pool_, transcript_, src_, &error);
        if (!inner_closed) return {false, where + ": " + error};
        cut->cut.restore({col0, col1}, std::move(inner_closed->sequence));
        EncodedInt back;
        back.modulus = 2;
        back.cards = std::move(inner_closed->selector);
        reattach_mod2(direction, std::move(back));

        if (!close_board_cut(std::move(*cut), verdict, where)) return verdict;
    }

    // A spent R encodes a value only the prover knows; it leaves play.
    for (Card& c : direction.cards) pool_.discard(c);
    return {true, ""};
}

Verdict TableRun::first_flood(int clue, ProverStrategy& strategy) {
    return flood(Phase::first_flood, clue, strategy);
}

Verdict TableRun::second_flood(int clue, ProverStrategy& strategy) {
    return flood(Phase::second_flood, clue, strategy);
}

Verdict TableRun::clue_check(int clue) {
    const Clue& c = puzzle_.clue(clue);
    int linear = board_.geometry().linear_of_cell(c.cell);
    Card& card = board_.at_linear_mut(linear);
    int value = card.reveal();
    Event e;
    e.type = EventType::reveal;
    e.context = "clue_cell";
    e.count = 1;
    e.value = value;
    e.cell = linear;  // the clue cell is public information
    transcript_.add(std::move(e));
    card.hide();
    if (value != clue)
        return {false, "clue cell of clue " + std::to_string(clue) +
                           " revealed " + std::to_string(value) + ", expected " +
                           std::to_string(clue)};
    return {true, ""};
}

Verdict TableRun::verify(ProverStrategy& strategy) {
    std::vector<int> order;
    for (const Clue& c : puzzle_.clues()) order.push_back(c.index);
    std::sort(order.begin(), order.end());
    return verify_order(strategy, order);
}

Verdict TableRun::verify_order(ProverStrategy& strategy,
                               const std::vector<int>& order) {
    Verdict verdict{true, ""};
    for (int clue : order) {
        verdict = first_flood(clue, strategy);
        if (!verdict.accepted) break;
        verdict = second_flood(clue, strategy);
        if (!verdict.accepted) break;
        verdict = clue_check(clue);
        if (!verdict.accepted) break;
    }
    transcript_.set_verdict(verdict.accepted);
    return verdict;
}

Verdict TableRun::sea_formation(int t, SeaStrategy& strategy) {
    Verdict verdict = sea_formation_steps(t, strategy);
    transcript_.set_verdict(verdict.accepted);
    return verdict;
}

Verdict TableRun::sea_formation_steps(int t, SeaStrategy& strategy) {
    if (t < 1) throw std::invalid_argument("area size must be positive");
    Verdict verdict;

    Cell start = strategy.sea_start(board_);
    auto cut = open_board_cut(start, verdict, "sea formation start");
    if (!cut) return verdict;
    int v = cut->cut.reveal_selected("start_card", transcript_);
    if (v != 0)
        return {false, "sea formation start: revealed " + std::to_string(v) +
                           ", expected 0"};
    cut->cut.replace_selected(1, pool_, transcript_);
    if (!close_board_cut(std::move(*cut), verdict, "sea formation start"))
        return verdict;

    for (int it = 1; it <= t - 1; ++it) {
        const std::string where = "sea formation, iteration " + std::to_string(it);
        auto [cell, dir] = strategy.sea_step(board_, it);
        cut = open_board_cut(cell, verdict, where);
        if (!cut) return verdict;
        v = cut->cut.reveal_selected("cut_card", transcript_);
        if (v != 1)
            return {false, where + ": cut revealed " + std::to_string(v) +
                               ", expected 1"};

        // All four neighbors, in the reading-order convention
        // (left, right, top, bottom); the chosen one stays secret.
        const Direction dirs[4] = {Direction::left, Direction::right,
                                   Direction::top, Direction::bottom};
        std::vector<int> cols;
        std::vector<int> labels;
        int secret_pos = -1;
        for (int i = 0; i < 4; ++i) {
            cols.push_back(cut->cut.col_at_offset(
                neighbor_offset(dirs[i], board_.geometry())));
            labels.push_back(cut->cut.source_label(cols.back()));
            if (dirs[i] == dir) secret_pos = i;
        }
        std::vector<Card> quad = cut->cut.extract(cols);
        std::vector<Card> selector = arrange_indicator(hand_, 4, secret_pos);
        std::string error;
        auto inner = ChosenCut::open(std::move(quad), std::move(selector), pool_,
                                     transcript_, src_, &error, labels);
        if (!inner) return {false, where + ": " + error};
        v = inner->reveal_selected("neighbor_card", transcript_);
        if (v != 0)
            return {false, where + ": neighbor revealed " + std::to_string(v) +
                               ", expected 0"};
        inner->replace_selected(1, pool_, transcript_);
        auto inner_closed = inner->close(pool_, transcript_, src_, &error);
        if (!inner_closed) return {false, where + ": " + error};
        cut->cut.restore(cols, std::move(inner_closed->sequence));
        return_to_hand(hand_, std::move(inner_closed->selector));
        if (!close_board_cut(std::move(*cut), verdict, where)) return verdict;
    }
    return {true, ""};
}

VerifyResult verify_shikaku(const Puzzle& puzzle, ProverStrategy& strategy,
                            ShuffleSource& src) {
    TableRun run(puzzle, src);
    Verdict verdict = run.verify(strategy);
    return {verdict, std::move(run.transcript())};
}

HonestProver::HonestProver(const Puzzle& puzzle, const Partition& partition,
                           bool strict, FillOrder order) {
    if (strict) {
        CheckResult check = check_solution(puzzle, partition);
        if (!check.accepted() || !check.tiles_grid)
            throw std::invalid_argument("honest prover needs a valid solution: " +
                                        check.message);
    }
    for (const Clue& clue : puzzle.clues()) {
        auto it = partition.rects.find(clue.index);
        if (it == partition.rects.end())
            throw std::invalid_argument("partition missing clue index " +
                                        std::to_string(clue.index));
        const Rect& z = it->second;
        const int h = z.height();
        const int a = z.top_left.row, b = z.top_left.col;
        const int a2 = z.bottom_right.row, b2 = z.bottom_right.col;

        FloodPlan down{{a, b}, {}, h};
        for (int r = a; r < a2; ++r) down.cuts.push_back({r, b});
        if (order == FillOrder::column_major) {
            for (int c = b + 1; c <= b2; ++c)
                for (int r = a; r <= a2; ++r) down.cuts.push_back({r, c - 1});
        } else {
            for (int r = a; r <= a2; ++r)
                for (int c = b + 1; c <= b2; ++c) down.cuts.push_back({r, c - 1});
        }

        FloodPlan up{{a2, b2}, {}, h};
        for (int r = a2; r > a; --r) up.cuts.push_back({r, b2});
        if (order == FillOrder::column_major) {
            for (int c = b2 - 1; c >= b; --c)
                for (int r = a2; r >= a; --r) up.cuts.push_back({r, c + 1});
        } else {
            for (int r = a2; r >= a; --r)
                for (int c = b2 - 1; c >= b; --c) up.cuts.push_back({r, c + 1});
        }

        // A lenient plan may be shorter or longer than the iteration count
        // of a lying clue value; pad so the protocol (not the strategy)
        // does the rejecting.
        int need = clue.value - 1;
        while (static_cast<int>(down.cuts.size()) < need)
            down.cuts.push_back(down.cuts.empty() ? down.start : down.cuts.back());
        while (static_cast<int>(up.cuts.size()) < need)
            up.cuts.push_back(up.cuts.empty() ? up.start : up.cuts.back());

        first_[clue.index] = std::move(down);
        second_[clue.index] = std::move(up);
    }
}

const HonestProver::FloodPlan& HonestProver::plan(Phase phase, int clue) const {
    const auto& map = (phase == Phase::first_flood) ? first_ : second_;
    return map.at(clue);
}

Cell HonestProver::flood_start(const Board&, Phase phase, int clue) {
    return plan(phase, clue).start;
}

int HonestProver::choose_s(const Board&, Phase phase, int clue, int iteration) {
    return iteration == plan(phase, clue).direction_change ? 1 : 0;
}

Cell HonestProver::choose_cut(const Board&, Phase phase, int clue, int iteration) {
    return plan(phase, clue).cuts.at(iteration - 1);
}

std::unique_ptr<ProverStrategy> honest_prover(const Puzzle& puzzle,
                                              const Partition& partition) {
    return std::make_unique<HonestProver>(puzzle, partition);
}

}  // namespace shikaku
