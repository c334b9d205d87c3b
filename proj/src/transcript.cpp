#include "transcript.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace shikaku {

namespace {

const char* type_name(EventType t) {
    switch (t) {
        case EventType::place_public: return "place_public";
        case EventType::place_secret: return "place_secret";
        case EventType::shuffle: return "shuffle";
        case EventType::reveal: return "reveal";
        case EventType::shift: return "shift";
        case EventType::replace: return "replace";
        case EventType::claim: return "claim";
    }
    return "?";
}

}  // namespace

Transcript Transcript::verifier_view() const {
    Transcript view;
    view.audit_view_ = false;
    view.verdict_ = verdict_;
    for (Event e : events_) {
        e.offset.reset();
        e.secret_values.clear();
        e.audit_cell.reset();
        view.events_.push_back(std::move(e));
    }
    return view;
}

nlohmann::json Transcript::to_json() const {
    nlohmann::json events = nlohmann::json::array();
    for (const Event& e : events_) {
        nlohmann::json j;
        j["type"] = type_name(e.type);
        switch (e.type) {
            case EventType::place_public:
                j["where"] = e.context;
                j["count"] = e.count;
                if (e.one_at >= 0) j["one_at"] = e.one_at;
                if (!e.values.empty()) j["values"] = e.values;
                else j["value"] = e.value;
                break;
            case EventType::place_secret:
                j["where"] = e.context;
                j["count"] = e.count;
                break;
            case EventType::shuffle:
                j["rows"] = e.rows;
                j["cols"] = e.count;
                break;
            case EventType::reveal:
                j["context"] = e.context;
                j["count"] = e.count;
                if (e.count == 1) {
                    j["value"] = e.value;
                    if (e.cell) j["cell"] = *e.cell;
                } else if (e.one_at >= 0) {
                    j["one_at"] = e.one_at;
                } else {
                    j["values"] = e.values;
                }
                break;
            case EventType::shift:
                j["amount"] = e.amount;
                j["cols"] = e.count;
                break;
            case EventType::replace:
                j["col"] = e.col;
                j["old"] = e.old_value;
                j["new"] = e.new_value;
                break;
            case EventType::claim:
                j["clue"] = e.clue;
                j["phase"] = e.context;
                break;
        }
        if (e.offset) j["offset"] = *e.offset;
        if (!e.secret_values.empty()) j["secret_values"] = e.secret_values;
        if (e.audit_cell) j["audit_cell"] = *e.audit_cell;
        events.push_back(std::move(j));
    }
    nlohmann::json out;
    out["events"] = std::move(events);
    out["verdict"] = verdict_;
    out["view"] = audit_view_ ? "audit" : "verifier";
    return out;
}

std::string Transcript::to_json_string() const { return to_json().dump(); }

std::vector<std::string> canonical_reveal_sequence(const Transcript& view) {
    std::vector<std::string> tokens;
    for (const Event& e : view.events()) {
        if (e.type != EventType::reveal) continue;
        std::ostringstream tok;
        tok << e.context << '/' << e.count << '/';
        if (e.count == 1) {
            tok << e.value;
        } else {
            // Sort the row's values and run-length encode them; the 1's
            // position is shuffle noise and must not appear here.
            std::vector<int> vals = e.values;
            if (vals.empty() && e.one_at >= 0) {
                vals.assign(e.count, 0);
                vals[e.one_at] = 1;
            }
            std::sort(vals.begin(), vals.end());
            for (std::size_t i = 0; i < vals.size();) {
                std::size_t j = i;
                while (j < vals.size() && vals[j] == vals[i]) ++j;
                if (i) tok << ',';
                tok << vals[i] << 'x' << (j - i);
                i = j;
            }
        }
        tokens.push_back(tok.str());
    }
    return tokens;
}

std::string canonical_reveal_string(const Transcript& view) {
    std::string out;
    for (const std::string& t : canonical_reveal_sequence(view)) {
        out += t;
        out += '\n';
    }
    return out;
}

}  // namespace shikaku
