#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "puzzle.hpp"
#include "transcript.hpp"

namespace shikaku {

/// Raised when code observes state the verifier must not see, e.g. the
/// value of a face-down card outside prover-marked code.
class audit_error : public std::logic_error {
    using std::logic_error::logic_error;
};

/// RAII marker for code that legitimately holds private knowledge: prover
/// strategies and test/audit inspection. Reading a face-down card's value
/// anywhere else raises audit_error.
class PrivateScope {
public:
    PrivateScope();
    ~PrivateScope();
    PrivateScope(const PrivateScope&) = delete;
    PrivateScope& operator=(const PrivateScope&) = delete;
    static bool active();
};

constexpr int kDummy = -1;

/// A physical card: an integer face, an indistinguishable back, and an
/// opaque id used only by audit tooling (ids never enter the verifier view).
class Card {
public:
    Card() = default;
    Card(int value, std::uint32_t id) : value_(value), id_(id) {}

    bool face_up() const { return face_up_; }
    std::uint32_t id() const { return id_; }

    /// Flips the card face up and returns its value (a public act).
    int reveal() {
        face_up_ = true;
        return value_;
    }
    void hide() { face_up_ = false; }

    /// Value of a face-up card; on a face-down card this is an audit failure.
    int public_value() const {
        if (!face_up_) throw audit_error("reading a face-down card's value");
        return value_;
    }
    /// Value regardless of facing; requires an active PrivateScope.
    int covert_value() const {
        if (!face_up_ && !PrivateScope::active())
            throw audit_error("covert read outside prover-marked code");
        return value_;
    }

private:
    int value_ = 0;
    bool face_up_ = false;
    std::uint32_t id_ = 0;
};

/// Exact card counts needed to run the flooding protocol on a puzzle.
/// With N = (m+2)(n+2), k clues and P = max clue value:
///   dummies        = 2m + 2n + 4           (the border)
///   board_zeros    = mn                    (the interior)
///   flood_ones     = P                     (reused across rectangles)
///   clue_cards     = sum of p_i = mn       (p_i cards of value i per clue)
///   helper_zeros   = 2(N-1) + 6 + 2 + 4k   (board-cut rows 2 and 3, the
///                    inner-cut rows, one S sequence, one fresh R per flood)
///   helper_ones    = 2 + 2 + 1 + 2k        (same breakdown)
/// Every term is linear in mn (k <= mn, P <= mn, m+n <= mn+1), so
/// total <= 18*mn + 29.
struct Inventory {
    int dummies = 0;
    int board_zeros = 0;
    int flood_ones = 0;
    int helper_zeros = 0;
    int helper_ones = 0;
    int clue_cards = 0;           // total across all clue values
    std::map<int, int> per_value; // full multiset, by card value
    int total = 0;
};

Inventory inventory(const Puzzle& puzzle);

/// Public piles of cards sorted by value. Taking and returning cards here
/// is a public act, so only publicly-valued cards may come back; cards
/// whose value became secret go to the opaque discard instead.
class CardPool {
public:
    explicit CardPool(const Inventory& counts);
    static CardPool for_puzzle(const Puzzle& puzzle);

    Card take(int value);
    void put(Card card);
    void discard(Card card);

    int available(int value) const;
    int discarded() const { return static_cast<int>(discard_.size()); }
    /// Multiset of all card values currently in the pool and discard;
    /// audit use (discarded values are not public).
    std::map<int, int> audit_holdings() const;

private:
    std::map<int, std::vector<Card>> piles_;
    std::vector<Card> discard_;
    std::uint32_t next_id_ = 1;
};

enum class Direction { left, right, top, bottom };

/// Board geometry for an m x n puzzle bordered by dummy cards: rows and
/// columns gain index 0 and m+1 / n+1, and cells linearize in reading
/// order to 1-based indices 1 .. (m+2)(n+2).
struct BoardGeometry {
    int m = 0;
    int n = 0;

    int rows() const { return m + 2; }
    int cols() const { return n + 2; }
    int size() const { return rows() * cols(); }
    bool interior_linear(int i) const;
    /// Board coordinates (border rows/cols are 0 and m+1 / n+1).
    int linear(int row, int col) const { return row * cols() + col + 1; }
    int linear_of_cell(Cell c) const { return linear(c.row, c.col); }
    Cell cell_of_linear(int i) const {
        return {(i - 1) / cols(), (i - 1) % cols()};
    }
};

/// Neighbor arithmetic on reading-order linear indices:
/// left i-1, right i+1, top i-(n+2), bottom i+(n+2). The index must name
/// an interior cell; honest protocol code never asks for a border cell's
/// neighbor, and anything else is a contract violation.
int neighbor_index(int i, Direction dir, const BoardGeometry& geom);

/// Offset added to a matrix column (mod the board size) to reach a
/// neighbor after any cyclic shift; valid because pile-shifting shuffles
/// rotate whole columns.
int neighbor_offset(Direction dir, const BoardGeometry& geom);

/// The (m+2) x (n+2) card matrix: dummy border, all-zero interior, all
/// face-down. Construction draws from the pool and logs one public
/// placement event.
class Board {
public:
    Board(const Puzzle& puzzle, CardPool& pool, Transcript& transcript);

    const BoardGeometry& geometry() const { return geom_; }
    const Card& at_linear(int i) const { return cells_.at(i - 1); }
    const Card& at(Cell c) const { return at_linear(geom_.linear_of_cell(c)); }
    Card& at_linear_mut(int i) { return cells_.at(i - 1); }

    bool cards_out() const { return cards_out_; }
    /// Removes every card in reading order (the chosen cut's sequence D).
    std::vector<Card> take_all();
    /// Returns cards taken by take_all, in the same order.
    void put_all(std::vector<Card> cards);

    /// Interior values in reading order; private knowledge.
    std::vector<int> covert_interior_values() const;
    /// Multiset of all values on the board; private knowledge.
    std::map<int, int> covert_value_counts() const;

private:
    BoardGeometry geom_;
    std::vector<Card> cells_;
    bool cards_out_ = false;
};

/// A face-down sequence encoding an integer: the 0-based position of the
/// single 1-card among modulus cards is the encoded value.
struct EncodedInt {
    std::vector<Card> cards;
    int modulus = 0;

    /// Decodes by covert inspection; private knowledge.
    int covert_decode() const;
};

/// Assembles an encoding from loose cards (one 1, rest 0). The caller is
/// responsible for the matching placement event.
EncodedInt assemble_encoding(CardPool& pool, int value, int modulus);
/// Returns a consumed encoding's cards to the pool; public only when the
/// values are publicly known (e.g. after a full reveal).
void return_encoding(CardPool& pool, EncodedInt e);

/// Swaps the two rightmost cards; the sequence then encodes the negation
/// mod 3.
void negate_mod3(EncodedInt& e);

/// Takes the two leftmost cards, which encode the same value mod 2 when
/// the original value was 0 or 1. A dishonest value of 2 yields an
/// all-zero pair that later fails the chosen cut's format reveal.
EncodedInt truncate_to_mod2(EncodedInt& e);

/// Puts a truncated pair back in front of the remaining card; valid after
/// a neighbor selection restored the pair's original order.
void reattach_mod2(EncodedInt& e, EncodedInt pair);

}  // namespace shikaku
