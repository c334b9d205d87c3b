#include "primitives.hpp"

#include <algorithm>

namespace shikaku {

namespace {

void log_secret_placement(const std::string& where, const std::vector<Card>& cards,
                          Transcript& transcript) {
    Event e;
    e.type = EventType::place_secret;
    e.context = where;
    e.count = static_cast<int>(cards.size());
    {
        PrivateScope audit;
        for (const Card& c : cards) e.secret_values.push_back(c.covert_value());
    }
    transcript.add(std::move(e));
}

int count_ones(const std::vector<int>& values) {
    int ones = 0;
    for (int v : values) {
        if (v == 1) ++ones;
        else if (v != 0) return -1;  // foreign card in an indicator row
    }
    return ones;
}

}  // namespace

ChosenCut::ChosenCut(CutMatrix matrix, int selected_col, int rotation,
                     std::vector<int> labels)
    : matrix_(std::move(matrix)),
      selected_col_(selected_col),
      rotation_(rotation),
      labels_(std::move(labels)) {}

std::optional<ChosenCut> ChosenCut::open(std::vector<Card> sequence,
                                         std::vector<Card> selector,
                                         CardPool& pool, Transcript& transcript,
                                         ShuffleSource& src, std::string* error,
                                         std::vector<int> source_labels) {
    const int q = static_cast<int>(sequence.size());
    if (q < 1) throw std::invalid_argument("chosen cut needs a nonempty sequence");
    if (selector.size() != sequence.size())
        throw std::invalid_argument("selector row width mismatch");
    if (source_labels.empty())
        for (int i = 1; i <= q; ++i) source_labels.push_back(i);
    if (static_cast<int>(source_labels.size()) != q)
        throw std::invalid_argument("source label width mismatch");

    log_secret_placement("cut_row2", selector, transcript);

    std::vector<Card> indicator;
    indicator.reserve(q);
    for (int i = 0; i < q; ++i) indicator.push_back(pool.take(i == 0 ? 1 : 0));
    Event place;
    place.type = EventType::place_public;
    place.context = "cut_row3";
    place.count = q;
    place.one_at = 0;
    transcript.add(std::move(place));

    CutMatrix matrix({std::move(sequence), std::move(selector), std::move(indicator)});
    int x = src.next(q);
    matrix.rotate_right(x);
    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 3;
    shuffle.count = q;
    shuffle.offset = x;
    transcript.add(std::move(shuffle));

    std::vector<int> row2 = matrix.reveal_row(1, "cut_row2", transcript);
    if (count_ones(row2) != 1) {
        if (error) *error = "selector row not in one-1 format";
        return std::nullopt;
    }
    int col = static_cast<int>(std::find(row2.begin(), row2.end(), 1) - row2.begin());
    return ChosenCut(std::move(matrix), col, x, std::move(source_labels));
}

int ChosenCut::col_at_offset(int delta) const {
    int q = matrix_.cols();
    return ((selected_col_ + delta) % q + q) % q;
}

int ChosenCut::source_index(int col) const {
    int q = matrix_.cols();
    return ((col - rotation_) % q + q) % q;
}

int ChosenCut::reveal_selected(const std::string& context, Transcript& transcript) {
    return reveal_at(selected_col_, context, transcript);
}

int ChosenCut::reveal_at(int col, const std::string& context,
                         Transcript& transcript) {
    Card& card = matrix_.at(0, col);
    int value = card.reveal();
    Event e;
    e.type = EventType::reveal;
    e.context = context;
    e.count = 1;
    e.value = value;
    e.audit_cell = source_label(col);
    transcript.add(std::move(e));
    card.hide();
    return value;
}

void ChosenCut::replace_selected(int new_value, CardPool& pool,
                                 Transcript& transcript) {
    Card& slot = matrix_.at(0, selected_col_);
    Card incoming = pool.take(new_value);
    Card removed = slot;
    slot = incoming;
    Event e;
    e.type = EventType::replace;
    e.col = selected_col_;
    {
        PrivateScope audit;  // removed card's value was just revealed publicly
        e.old_value = removed.covert_value();
    }
    e.new_value = new_value;
    e.audit_cell = source_label(selected_col_);
    transcript.add(std::move(e));
    pool.put(removed);
}

std::vector<Card> ChosenCut::extract(const std::vector<int>& cols) {
    std::vector<Card> out;
    out.reserve(cols.size());
    for (int c : cols) out.push_back(matrix_.at(0, c));
    return out;
}

void ChosenCut::restore(const std::vector<int>& cols, std::vector<Card> cards) {
    if (cols.size() != cards.size())
        throw std::invalid_argument("restore width mismatch");
    for (std::size_t i = 0; i < cols.size(); ++i)
        matrix_.at(0, cols[i]) = cards[i];
}

std::optional<ChosenCut::Closed> ChosenCut::close(CardPool& pool,
                                                  Transcript& transcript,
                                                  ShuffleSource& src,
                                                  std::string* error) {
    matrix_.hide_row(1);
    int x = src.next(matrix_.cols());
    matrix_.rotate_right(x);
    rotation_ += x;
    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 3;
    shuffle.count = matrix_.cols();
    shuffle.offset = x;
    transcript.add(std::move(shuffle));

    std::vector<int> row3 = matrix_.reveal_row(2, "cut_row3", transcript);
    if (count_ones(row3) != 1) {
        if (error) *error = "restore row not in one-1 format";
        return std::nullopt;
    }
    if (!shift_to_column1(matrix_, 2, transcript))
        throw std::logic_error("shift failed on a row that just passed its check");
    matrix_.hide_row(2);

    Closed closed;
    closed.sequence = matrix_.release_row(0);
    closed.selector = matrix_.release_row(1);
    for (Card& c : matrix_.release_row(2)) pool.put(c);
    return closed;
}

bool reveal_rightmost_is_zero(EncodedInt& e, const std::string& context,
                              Transcript& transcript) {
    if (e.modulus != 3)
        throw std::invalid_argument("the not-2 check applies to mod-3 sequences");
    Card& card = e.cards.back();
    int value = card.reveal();
    Event ev;
    ev.type = EventType::reveal;
    ev.context = context;
    ev.count = 1;
    ev.value = value;
    transcript.add(std::move(ev));
    card.hide();
    return value == 0;
}

std::optional<EncodedInt> add_mod3(EncodedInt r, EncodedInt s, CardPool& pool,
                                   Transcript& transcript, ShuffleSource& src,
                                   std::string* error) {
    if (r.modulus != 3 || s.modulus != 3)
        throw std::invalid_argument("add_mod3 needs two mod-3 sequences");
    negate_mod3(s);  // S' encodes -s
    CutMatrix matrix({std::move(s.cards), std::move(r.cards)});

    int x = src.next(3);
    matrix.rotate_right(x);
    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 2;
    shuffle.count = 3;
    shuffle.offset = x;
    transcript.add(std::move(shuffle));

    std::vector<int> row1 = matrix.reveal_row(0, "add_row1", transcript);
    int ones = 0;
    for (int v : row1) {
        if (v == 1) ++ones;
        else if (v != 0) ones = -1;
    }
    if (ones != 1) {
        if (error) *error = "addend row not in one-1 format";
        return std::nullopt;
    }
    if (!shift_to_column1(matrix, 0, transcript))
        throw std::logic_error("shift failed after a passing format check");
    matrix.hide_row(0);
    for (Card& c : matrix.release_row(0)) pool.put(c);  // spent S', values public

    EncodedInt sum;
    sum.modulus = 3;
    sum.cards = matrix.release_row(1);
    return sum;
}

std::optional<ChosenCut> neighbor_selection(Card c0, Card c1, EncodedInt selector,
                                            CardPool& pool, Transcript& transcript,
                                            ShuffleSource& src, std::string* error,
                                            std::vector<int> source_labels) {
    if (selector.modulus != 2 || selector.cards.size() != 2)
        throw std::invalid_argument("neighbor selection needs a mod-2 selector");
    return ChosenCut::open({std::move(c0), std::move(c1)},
                           std::move(selector.cards), pool, transcript, src, error,
                           std::move(source_labels));
}

}  // namespace shikaku
