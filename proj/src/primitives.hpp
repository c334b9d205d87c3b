#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cards.hpp"
#include "shuffle.hpp"
#include "transcript.hpp"

namespace shikaku {

/// A live chosen cut: the 3 x q matrix of a sequence (row 1), the prover's
/// secret selector (row 2, revealed after the shuffle) and the public
/// restore indicator (row 3). While the handle is open the caller may act
/// on the selected card or borrow other row-1 cards for nested protocols;
/// close() runs the restore steps and hands back sequence and selector in
/// their original order.
class ChosenCut {
public:
    /// Builds the matrix, logs the placements, shuffles, and reveals the
    /// selector row. Returns nullopt on a format violation (not exactly
    /// one 1), with the reason in *error; the verifier rejects there.
    /// `source_labels` names each sequence position for audit payloads
    /// (board linear indices for board cuts, inherited labels for nested
    /// cuts); empty means positions 1..q.
    static std::optional<ChosenCut> open(std::vector<Card> sequence,
                                         std::vector<Card> selector,
                                         CardPool& pool, Transcript& transcript,
                                         ShuffleSource& src, std::string* error,
                                         std::vector<int> source_labels = {});

    int cols() const { return matrix_.cols(); }
    int selected_col() const { return selected_col_; }
    /// Column at a cyclic offset from the selection; offsets follow the
    /// board's reading-order neighbor arithmetic.
    int col_at_offset(int delta) const;
    /// Original row-1 position of a current column (audit bookkeeping).
    int source_index(int col) const;
    /// The audit label behind a current column (a board cell for board
    /// cuts).
    int source_label(int col) const { return labels_.at(source_index(col)); }
    /// Card inspection for identity checks in tests; ids carry no value.
    const Card& peek_card(int col) const { return matrix_.at(0, col); }

    /// Reveals the selected card (single-card event) and turns it back
    /// face-down. Returns the value.
    int reveal_selected(const std::string& context, Transcript& transcript);
    /// Reveals the card at an arbitrary column.
    int reveal_at(int col, const std::string& context, Transcript& transcript);

    /// Swaps the selected card for a fresh one from the pool; the removed
    /// card's value was just revealed, so it returns to the public piles.
    void replace_selected(int new_value, CardPool& pool, Transcript& transcript);

    /// Borrows row-1 cards at the given columns for a nested protocol.
    std::vector<Card> extract(const std::vector<int>& cols);
    void restore(const std::vector<int>& cols, std::vector<Card> cards);

    struct Closed {
        std::vector<Card> sequence;  // original order, replacements in place
        std::vector<Card> selector;  // original order
    };
    /// Steps 4-6: hide the selector row, shuffle again, reveal the restore
    /// row and shift its 1 to column 1. Returns nullopt on a format
    /// violation in the restore row.
    std::optional<Closed> close(CardPool& pool, Transcript& transcript,
                                ShuffleSource& src, std::string* error);

private:
    ChosenCut(CutMatrix matrix, int selected_col, int rotation,
              std::vector<int> labels);

    CutMatrix matrix_;
    int selected_col_;
    int rotation_;  // net column rotation since construction (audit only)
    std::vector<int> labels_;
};

/// Reveals the rightmost card of a mod-3 sequence (the "not 2" check) and
/// turns it back face-down. True iff the card is a 0.
bool reveal_rightmost_is_zero(EncodedInt& e, const std::string& context,
                              Transcript& transcript);

/// Addition in Z/3Z: consumes R and S, returns a face-down sequence
/// encoding r+s. The protocol reveals one full row at a uniform position,
/// which doubles as S's format check; a malformed S yields nullopt.
std::optional<EncodedInt> add_mod3(EncodedInt r, EncodedInt s, CardPool& pool,
                                   Transcript& transcript, ShuffleSource& src,
                                   std::string* error);

/// Chosen cut over (c0, c1) with a mod-2 encoding as the selector row:
/// selects c_r without revealing r. Close the returned handle to put both
/// cards and the selector back where they came from.
std::optional<ChosenCut> neighbor_selection(Card c0, Card c1, EncodedInt selector,
                                            CardPool& pool, Transcript& transcript,
                                            ShuffleSource& src, std::string* error,
                                            std::vector<int> source_labels = {});

}  // namespace shikaku
