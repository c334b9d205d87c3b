#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace shikaku {

// Everything both parties can observe goes into the transcript. Audit-only
// payloads (shuffle offsets, secret placements, board cells behind reveals
// and replacements) are carried on the same events and stripped by
// verifier_view(); the verifier view is the object the zero-knowledge
// property is stated about.
enum class EventType {
    place_public,
    place_secret,
    shuffle,
    reveal,
    shift,
    replace,
    claim,
};

struct Event {
    EventType type;

    // Public payload; which fields are meaningful depends on `type`.
    std::string context;          // reveal context / placement target / claim phase
    int clue = -1;                // claim
    int count = 0;                // cards involved (row width, placement size)
    int rows = 0;                 // shuffle: matrix height
    int one_at = -1;              // column of the single 1 in a row reveal
    int value = 0;                // single-card reveal value / public encoding
    int old_value = 0;            // replace
    int new_value = 0;            // replace
    int amount = -1;              // shift
    int col = -1;                 // replace: matrix column (public, post-shuffle)
    std::optional<int> cell;      // clue-cell reveal: board index (public there)
    std::vector<int> values;      // full row contents when not in one-1 format

    // Audit-only payload.
    std::optional<int> offset;        // shuffle offset
    std::vector<int> secret_values;   // secretly placed card values
    std::optional<int> audit_cell;    // board linear index behind the event
};

class Transcript {
public:
    Transcript() = default;
    /// A transcript born as a verifier view (what a simulator emits).
    static Transcript as_verifier_view() {
        Transcript t;
        t.audit_view_ = false;
        return t;
    }

    void add(Event e) { events_.push_back(std::move(e)); }
    void set_verdict(bool accepted) { verdict_ = accepted ? "accept" : "reject"; }

    const std::vector<Event>& events() const { return events_; }
    const std::string& verdict() const { return verdict_; }
    bool is_audit_view() const { return audit_view_; }

    /// Projection to what the verifier can observe: drops offsets, secret
    /// card values, and board-cell annotations. Idempotent.
    Transcript verifier_view() const;

    nlohmann::json to_json() const;
    std::string to_json_string() const;

private:
    std::vector<Event> events_;
    std::string verdict_;
    bool audit_view_ = true;
};

/// The ordered revealed values with positional data removed: positions are
/// uniform shuffle noise, values are the deterministic part of the view.
/// Each reveal contributes one token; tokens from full-row reveals sort the
/// row's values.
std::vector<std::string> canonical_reveal_sequence(const Transcript& view);

/// canonical_reveal_sequence joined by newlines, for byte comparisons.
std::string canonical_reveal_string(const Transcript& view);

}  // namespace shikaku
