#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cards.hpp"
#include "transcript.hpp"

namespace shikaku {

/// Source of the shuffle offsets nobody is allowed to observe. Seeded mode
/// draws uniformly on {0..q-1} with an unbiased rejection sampler; scripted
/// and constant modes exist for the test harness only, where exact
/// enumeration replaces statistics.
class ShuffleSource {
public:
    static ShuffleSource seeded(std::uint64_t seed);
    static ShuffleSource scripted(std::vector<int> offsets);
    static ShuffleSource constant(int offset);
    /// Deterministic pattern valid for any width: draw i yields
    /// (i * stride) mod q.
    static ShuffleSource cycling(int stride);

    /// Next offset in {0..q-1}.
    int next(int q);
    /// Offsets drawn so far (used to size enumeration scripts).
    int draws() const { return draws_; }
    /// Records each draw's width into `sink`; the exact-enumeration tests
    /// use this to learn a run's draw structure before scripting it.
    void record_widths(std::vector<int>* sink) { width_sink_ = sink; }

private:
    enum class Mode { seeded, scripted, constant, cycling };
    ShuffleSource(Mode mode) : mode_(mode) {}

    Mode mode_;
    std::mt19937_64 gen_;
    std::vector<int> script_;
    std::size_t pos_ = 0;
    int constant_ = 0;
    int draws_ = 0;
    std::vector<int>* width_sink_ = nullptr;
};

/// A p x q matrix of face-down piles, the object pile-shifting shuffles
/// act on. Columns move as units.
class CutMatrix {
public:
    explicit CutMatrix(std::vector<std::vector<Card>> rows);

    int cols() const { return q_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    Card& at(int row, int col) { return rows_.at(row).at(col); }
    const Card& at(int row, int col) const { return rows_.at(row).at(col); }

    void rotate_right(int x);
    std::vector<Card> release_row(int row);

    /// Flips a whole row face up, logs one reveal event, and returns the
    /// values. The event stores only the 1's position when the row is in
    /// one-1 format, otherwise the raw values.
    std::vector<int> reveal_row(int row, const std::string& context,
                                Transcript& transcript);
    void hide_row(int row);

private:
    std::vector<std::vector<Card>> rows_;
    int q_;
};

/// The pile-shifting shuffle: a uniformly random cyclic shift of the
/// columns, offset drawn from `src`. The offset is recorded on the event's
/// audit payload only; the verifier learns just that a shuffle happened.
void pile_shifting_shuffle(CutMatrix& matrix, ShuffleSource& src,
                           Transcript& transcript);

/// Deterministic public shift moving the single face-up 1 of `row` to
/// column 1. Returns false (a format violation for the verifier) when the
/// row is not fully face-up with exactly one 1.
bool shift_to_column1(CutMatrix& matrix, int row, Transcript& transcript);

}  // namespace shikaku
