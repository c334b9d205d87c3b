#include "cards.hpp"

#include <algorithm>

namespace shikaku {

namespace {
thread_local int private_depth = 0;
}

PrivateScope::PrivateScope() { ++private_depth; }
PrivateScope::~PrivateScope() { --private_depth; }
bool PrivateScope::active() { return private_depth > 0; }

Inventory inventory(const Puzzle& puzzle) {
    const int m = puzzle.rows();
    const int n = puzzle.cols();
    const int N = (m + 2) * (n + 2);
    const int k = puzzle.clue_count();
    int max_p = 0;
    for (const Clue& c : puzzle.clues()) max_p = std::max(max_p, c.value);

    Inventory inv;
    inv.dummies = 2 * m + 2 * n + 4;
    inv.board_zeros = m * n;
    inv.flood_ones = max_p;
    // Board-cut selector and restore rows (one 1 + N-1 zeros each), the
    // inner-cut rows for up to four candidate cards (one 1 + three zeros
    // each), the S sequence, and one fresh R per flood (two floods per
    // clue; a spent R's value is secret, so it is discarded, not reused).
    inv.helper_zeros = 2 * (N - 1) + 6 + 2 + 4 * k;
    inv.helper_ones = 2 + 2 + 1 + 2 * k;
    for (const Clue& c : puzzle.clues()) {
        inv.per_value[c.index] += c.value;
        inv.clue_cards += c.value;
    }
    inv.per_value[kDummy] += inv.dummies;
    inv.per_value[0] += inv.board_zeros + inv.helper_zeros;
    inv.per_value[1] += inv.flood_ones + inv.helper_ones;
    for (const auto& [value, count] : inv.per_value) inv.total += count;
    return inv;
}

CardPool::CardPool(const Inventory& counts) {
    for (const auto& [value, count] : counts.per_value)
        for (int i = 0; i < count; ++i)
            piles_[value].push_back(Card(value, next_id_++));
}

CardPool CardPool::for_puzzle(const Puzzle& puzzle) {
    return CardPool(inventory(puzzle));
}

Card CardPool::take(int value) {
    auto it = piles_.find(value);
    if (it == piles_.end() || it->second.empty())
        throw std::logic_error("card pool exhausted for value " +
                               std::to_string(value));
    Card card = it->second.back();
    it->second.pop_back();
    card.hide();
    return card;
}

void CardPool::put(Card card) {
    PrivateScope audit;
    card.hide();
    piles_[card.covert_value()].push_back(card);
}

void CardPool::discard(Card card) {
    card.hide();
    discard_.push_back(card);
}

int CardPool::available(int value) const {
    auto it = piles_.find(value);
    return it == piles_.end() ? 0 : static_cast<int>(it->second.size());
}

std::map<int, int> CardPool::audit_holdings() const {
    PrivateScope audit;
    std::map<int, int> counts;
    for (const auto& [value, pile] : piles_)
        counts[value] += static_cast<int>(pile.size());
    for (const Card& c : discard_) counts[c.covert_value()] += 1;
    return counts;
}

bool BoardGeometry::interior_linear(int i) const {
    if (i < 1 || i > size()) return false;
    Cell c = cell_of_linear(i);
    return 1 <= c.row && c.row <= m && 1 <= c.col && c.col <= n;
}

int neighbor_offset(Direction dir, const BoardGeometry& geom) {
    switch (dir) {
        case Direction::left: return -1;
        case Direction::right: return 1;
        case Direction::top: return -(geom.n + 2);
        case Direction::bottom: return geom.n + 2;
    }
    throw std::invalid_argument("bad direction");
}

int neighbor_index(int i, Direction dir, const BoardGeometry& geom) {
    if (!geom.interior_linear(i))
        throw std::invalid_argument("neighbor_index: " + std::to_string(i) +
                                    " is not an interior cell");
    return i + neighbor_offset(dir, geom);
}

Board::Board(const Puzzle& puzzle, CardPool& pool, Transcript& transcript)
    : geom_{puzzle.rows(), puzzle.cols()} {
    cells_.reserve(geom_.size());
    for (int r = 0; r < geom_.rows(); ++r) {
        for (int c = 0; c < geom_.cols(); ++c) {
            bool border = r == 0 || r == geom_.rows() - 1 || c == 0 ||
                          c == geom_.cols() - 1;
            cells_.push_back(pool.take(border ? kDummy : 0));
        }
    }
    Event e;
    e.type = EventType::place_public;
    e.context = "board";
    e.count = geom_.size();
    {
        PrivateScope placement;  // values are public here: we just placed them
        for (const Card& c : cells_) e.values.push_back(c.covert_value());
    }
    transcript.add(std::move(e));
}

std::vector<Card> Board::take_all() {
    if (cards_out_) throw std::logic_error("board cards already taken");
    cards_out_ = true;
    std::vector<Card> out = std::move(cells_);
    cells_.clear();
    return out;
}

void Board::put_all(std::vector<Card> cards) {
    if (!cards_out_) throw std::logic_error("board cards were not taken");
    if (static_cast<int>(cards.size()) != geom_.size())
        throw std::logic_error("wrong number of cards returned to the board");
    cells_ = std::move(cards);
    cards_out_ = false;
}

std::vector<int> Board::covert_interior_values() const {
    PrivateScope audit;
    std::vector<int> out;
    for (int r = 1; r <= geom_.m; ++r)
        for (int c = 1; c <= geom_.n; ++c)
            out.push_back(at(Cell{r, c}).covert_value());
    return out;
}

std::map<int, int> Board::covert_value_counts() const {
    PrivateScope audit;
    std::map<int, int> counts;
    for (const Card& c : cells_) counts[c.covert_value()] += 1;
    return counts;
}

int EncodedInt::covert_decode() const {
    PrivateScope prover;
    int pos = -1;
    for (std::size_t i = 0; i < cards.size(); ++i) {
        int v = cards[i].covert_value();
        if (v == 1) {
            if (pos >= 0) throw std::logic_error("malformed encoding: two 1s");
            pos = static_cast<int>(i);
        } else if (v != 0) {
            throw std::logic_error("malformed encoding: unexpected card value");
        }
    }
    if (pos < 0) throw std::logic_error("malformed encoding: no 1");
    return pos;
}

EncodedInt assemble_encoding(CardPool& pool, int value, int modulus) {
    if (value < 0 || value >= modulus)
        throw std::invalid_argument("encoding value out of range");
    EncodedInt e;
    e.modulus = modulus;
    for (int i = 0; i < modulus; ++i) e.cards.push_back(pool.take(i == value ? 1 : 0));
    return e;
}

void return_encoding(CardPool& pool, EncodedInt e) {
    for (Card& c : e.cards) pool.put(c);
}

void negate_mod3(EncodedInt& e) {
    if (e.modulus != 3) throw std::invalid_argument("negate_mod3 needs modulus 3");
    std::swap(e.cards[1], e.cards[2]);
}

EncodedInt truncate_to_mod2(EncodedInt& e) {
    if (e.modulus != 3)
        throw std::invalid_argument("truncate_to_mod2 needs modulus 3");
    EncodedInt two;
    two.modulus = 2;
    two.cards.push_back(e.cards[0]);
    two.cards.push_back(e.cards[1]);
    e.cards.erase(e.cards.begin(), e.cards.begin() + 2);
    return two;
}

void reattach_mod2(EncodedInt& e, EncodedInt pair) {
    if (pair.cards.size() != 2 || e.cards.size() != 1)
        throw std::logic_error("reattach_mod2 on cards not from truncate_to_mod2");
    e.cards.insert(e.cards.begin(), pair.cards.begin(), pair.cards.end());
}

}  // namespace shikaku
