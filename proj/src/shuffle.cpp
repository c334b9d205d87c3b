#include "shuffle.hpp"

#include <algorithm>
#include <stdexcept>

namespace shikaku {

ShuffleSource ShuffleSource::seeded(std::uint64_t seed) {
    ShuffleSource src(Mode::seeded);
    src.gen_.seed(seed);
    return src;
}

ShuffleSource ShuffleSource::scripted(std::vector<int> offsets) {
    ShuffleSource src(Mode::scripted);
    src.script_ = std::move(offsets);
    return src;
}

ShuffleSource ShuffleSource::constant(int offset) {
    ShuffleSource src(Mode::constant);
    src.constant_ = offset;
    return src;
}

ShuffleSource ShuffleSource::cycling(int stride) {
    ShuffleSource src(Mode::cycling);
    src.constant_ = stride;
    return src;
}

int ShuffleSource::next(int q) {
    if (q < 1) throw std::invalid_argument("shuffle width must be positive");
    ++draws_;
    if (width_sink_) width_sink_->push_back(q);
    switch (mode_) {
        case Mode::seeded: {
            // Rejection sampling keeps the draw exactly uniform on {0..q-1}.
            const std::uint64_t uq = static_cast<std::uint64_t>(q);
            const std::uint64_t excess = (UINT64_MAX % uq + 1) % uq;
            const std::uint64_t max_ok = UINT64_MAX - excess;
            std::uint64_t r;
            do {
                r = gen_();
            } while (r > max_ok);
            return static_cast<int>(r % uq);
        }
        case Mode::scripted: {
            if (pos_ >= script_.size())
                throw std::logic_error("scripted shuffle offsets exhausted");
            int x = script_[pos_++];
            if (x < 0 || x >= q)
                throw std::logic_error("scripted offset " + std::to_string(x) +
                                       " out of range for q=" + std::to_string(q));
            return x;
        }
        case Mode::constant:
            if (constant_ >= q)
                throw std::logic_error("constant offset out of range");
            return constant_;
        case Mode::cycling:
            return static_cast<int>((static_cast<long long>(draws_ - 1) *
                                     constant_) %
                                    q);
    }
    throw std::logic_error("unreachable");
}

CutMatrix::CutMatrix(std::vector<std::vector<Card>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty())
        throw std::invalid_argument("cut matrix needs at least one card");
    q_ = static_cast<int>(rows_.front().size());
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != q_)
            throw std::invalid_argument("cut matrix rows of unequal width");
}

void CutMatrix::rotate_right(int x) {
    x = ((x % q_) + q_) % q_;
    if (x == 0) return;
    for (auto& row : rows_) std::rotate(row.begin(), row.begin() + (q_ - x), row.end());
}

std::vector<Card> CutMatrix::release_row(int row) {
    std::vector<Card> out = std::move(rows_.at(row));
    rows_.at(row).clear();
    return out;
}

std::vector<int> CutMatrix::reveal_row(int row, const std::string& context,
                                       Transcript& transcript) {
    std::vector<int> values;
    for (Card& c : rows_.at(row)) values.push_back(c.reveal());

    Event e;
    e.type = EventType::reveal;
    e.context = context;
    e.count = q_;
    int ones = static_cast<int>(std::count(values.begin(), values.end(), 1));
    bool rest_zero =
        std::all_of(values.begin(), values.end(), [](int v) { return v == 0 || v == 1; });
    if (ones == 1 && rest_zero)
        e.one_at = static_cast<int>(std::find(values.begin(), values.end(), 1) -
                                    values.begin());
    else
        e.values = values;
    transcript.add(std::move(e));
    return values;
}

void CutMatrix::hide_row(int row) {
    for (Card& c : rows_.at(row)) c.hide();
}

void pile_shifting_shuffle(CutMatrix& matrix, ShuffleSource& src,
                           Transcript& transcript) {
    int x = src.next(matrix.cols());
    matrix.rotate_right(x);
    Event e;
    e.type = EventType::shuffle;
    e.rows = matrix.row_count();
    e.count = matrix.cols();
    e.offset = x;  // audit payload; stripped from the verifier view
    transcript.add(std::move(e));
}

bool shift_to_column1(CutMatrix& matrix, int row, Transcript& transcript) {
    int pos = -1;
    for (int c = 0; c < matrix.cols(); ++c) {
        const Card& card = matrix.at(row, c);
        if (!card.face_up()) return false;
        int v = card.public_value();
        if (v == 1) {
            if (pos >= 0) return false;
            pos = c;
        } else if (v != 0) {
            return false;
        }
    }
    if (pos < 0) return false;
    int amount = (matrix.cols() - pos) % matrix.cols();
    matrix.rotate_right(amount);
    Event e;
    e.type = EventType::shift;
    e.amount = amount;
    e.count = matrix.cols();
    transcript.add(std::move(e));
    return true;
}

}  // namespace shikaku
