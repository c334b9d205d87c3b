#include "zk.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "fixtures.hpp"
#include "primitives.hpp"

namespace shikaku {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t salt,
                         std::uint64_t trial) {
    return mix64(seed ^ mix64(salt ^ mix64(trial)));
}

}  // namespace

// --------------------------------------------------------------------------
// Simulator
// --------------------------------------------------------------------------

namespace {

// Mirrors the event skeleton of one chosen cut over `q` cards; returns the
// revealed selector position.
int sim_cut_open(Transcript& t, ShuffleSource& src, int q) {
    Event sel;
    sel.type = EventType::place_secret;
    sel.context = "cut_row2";
    sel.count = q;
    t.add(std::move(sel));

    Event ind;
    ind.type = EventType::place_public;
    ind.context = "cut_row3";
    ind.count = q;
    ind.one_at = 0;
    t.add(std::move(ind));

    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 3;
    shuffle.count = q;
    t.add(std::move(shuffle));

    Event reveal;
    reveal.type = EventType::reveal;
    reveal.context = "cut_row2";
    reveal.count = q;
    reveal.one_at = src.next(q);
    int at = reveal.one_at;
    t.add(std::move(reveal));
    return at;
}

void sim_cut_close(Transcript& t, ShuffleSource& src, int q) {
    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 3;
    shuffle.count = q;
    t.add(std::move(shuffle));

    Event reveal;
    reveal.type = EventType::reveal;
    reveal.context = "cut_row3";
    reveal.count = q;
    reveal.one_at = src.next(q);
    int at = reveal.one_at;
    t.add(std::move(reveal));

    Event shift;
    shift.type = EventType::shift;
    shift.amount = (q - at) % q;
    shift.count = q;
    t.add(std::move(shift));
}

void sim_single_reveal(Transcript& t, const std::string& context, int value) {
    Event e;
    e.type = EventType::reveal;
    e.context = context;
    e.count = 1;
    e.value = value;
    t.add(std::move(e));
}

void sim_replace(Transcript& t, int col, int old_value, int new_value) {
    Event e;
    e.type = EventType::replace;
    e.col = col;
    e.old_value = old_value;
    e.new_value = new_value;
    t.add(std::move(e));
}

void sim_add_mod3(Transcript& t, ShuffleSource& src) {
    Event shuffle;
    shuffle.type = EventType::shuffle;
    shuffle.rows = 2;
    shuffle.count = 3;
    t.add(std::move(shuffle));

    Event reveal;
    reveal.type = EventType::reveal;
    reveal.context = "add_row1";
    reveal.count = 3;
    reveal.one_at = src.next(3);
    int at = reveal.one_at;
    t.add(std::move(reveal));

    Event shift;
    shift.type = EventType::shift;
    shift.amount = (3 - at) % 3;
    shift.count = 3;
    t.add(std::move(shift));
}

}  // namespace

Transcript simulate_transcript(const Puzzle& puzzle, ShuffleSource& src) {
    if (puzzle.clue_sum() != puzzle.cell_count())
        throw std::invalid_argument(
            "clue values do not sum to the cell count; no accepting "
            "transcript exists to simulate");

    Transcript t = Transcript::as_verifier_view();
    const BoardGeometry geom{puzzle.rows(), puzzle.cols()};
    const int N = geom.size();

    Event setup;
    setup.type = EventType::place_public;
    setup.context = "board";
    setup.count = N;
    for (int r = 0; r < geom.rows(); ++r)
        for (int c = 0; c < geom.cols(); ++c) {
            bool border =
                r == 0 || r == geom.rows() - 1 || c == 0 || c == geom.cols() - 1;
            setup.values.push_back(border ? kDummy : 0);
        }
    t.add(std::move(setup));

    std::vector<int> order;
    for (const Clue& c : puzzle.clues()) order.push_back(c.index);
    std::sort(order.begin(), order.end());

    for (int clue : order) {
        const int p = puzzle.clue(clue).value;
        for (Phase phase : {Phase::first_flood, Phase::second_flood}) {
            const bool first = (phase == Phase::first_flood);
            Event claim;
            claim.type = EventType::claim;
            claim.clue = clue;
            claim.context = first ? "first_flood" : "second_flood";
            t.add(std::move(claim));

            const int start_value = first ? 0 : 1;
            const int grow_value = first ? 1 : clue;

            int at = sim_cut_open(t, src, N);
            sim_single_reveal(t, "start_card", start_value);
            sim_replace(t, at, start_value, grow_value);
            sim_cut_close(t, src, N);

            Event r_event;
            r_event.type = EventType::place_public;
            r_event.context = "R";
            r_event.count = 3;
            r_event.one_at = 0;
            t.add(std::move(r_event));

            for (int it = 1; it <= p - 1; ++it) {
                Event s_event;
                s_event.type = EventType::place_secret;
                s_event.context = "S";
                s_event.count = 3;
                t.add(std::move(s_event));
                sim_single_reveal(t, "s_tail", 0);
                sim_add_mod3(t, src);
                sim_single_reveal(t, "sum_tail", 0);

                sim_cut_open(t, src, N);
                sim_single_reveal(t, "cut_card", grow_value);
                int inner_at = sim_cut_open(t, src, 2);
                sim_single_reveal(t, "neighbor_card", start_value);
                sim_replace(t, inner_at, start_value, grow_value);
                sim_cut_close(t, src, 2);
                sim_cut_close(t, src, N);
            }
        }
        Event clue_reveal;
        clue_reveal.type = EventType::reveal;
        clue_reveal.context = "clue_cell";
        clue_reveal.count = 1;
        clue_reveal.value = clue;
        clue_reveal.cell = geom.linear_of_cell(puzzle.clue(clue).cell);
        t.add(std::move(clue_reveal));
    }
    t.set_verdict(true);
    return t;
}

std::vector<RevealPosition> reveal_positions(const Transcript& view) {
    std::vector<RevealPosition> out;
    int ordinal = 0;
    for (const Event& e : view.events()) {
        if (e.type != EventType::reveal || e.count <= 1) continue;
        ++ordinal;
        if (e.one_at < 0) continue;  // format-violating row, no single 1
        RevealPosition rp;
        rp.key = std::to_string(ordinal) + ":" + e.context + "/" +
                 std::to_string(e.count);
        rp.width = e.count;
        rp.position = e.one_at;
        out.push_back(std::move(rp));
    }
    return out;
}

// --------------------------------------------------------------------------
// Malicious-strategy enumeration
// --------------------------------------------------------------------------

namespace {

struct ScriptExhausted {
    int options;
};
struct DeadBranch {};

Cell step(Cell c, Direction d) {
    switch (d) {
        case Direction::left: return {c.row, c.col - 1};
        case Direction::right: return {c.row, c.col + 1};
        case Direction::top: return {c.row - 1, c.col};
        case Direction::bottom: return {c.row + 1, c.col};
    }
    throw std::invalid_argument("bad direction");
}

// Follows a script of choice indices through every decision point the
// protocol interface offers; throws ScriptExhausted at the frontier so the
// driver can extend the script. Decisions with a single option are not
// recorded. Prover-marked code: inspects the face-down board.
class ScriptedProver final : public ProverStrategy {
public:
    explicit ScriptedProver(const std::vector<int>& script) : script_(script) {}

    // When set, first-flood choices are confined to this set of cells so
    // the flood produces exactly that shape.
    const std::set<Cell>* flood1_shape = nullptr;

    std::vector<int> domains;    // options at each recorded decision
    bool reached_second = false;

    Cell flood_start(const Board& board, Phase phase, int clue) override {
        (void)clue;
        if (phase == Phase::second_flood) reached_second = true;
        r_ = 0;
        int want = (phase == Phase::first_flood) ? 0 : 1;
        std::vector<Cell> cand = cells_with(board, want);
        if (phase == Phase::first_flood && flood1_shape)
            std::erase_if(cand,
                          [&](Cell c) { return flood1_shape->count(c) == 0; });
        if (cand.empty()) throw DeadBranch{};
        return cand.at(pick(static_cast<int>(cand.size())));
    }

    int choose_s(const Board&, Phase, int, int) override {
        // s = 2, and s = 1 once r is already 1, die at the not-2 reveals
        // before touching the board, so those branches are not explored.
        int s = (r_ == 0) ? pick(2) : 0;
        r_ += s;
        return s;
    }

    Cell choose_cut(const Board& board, Phase phase, int clue,
                    int iteration) override {
        (void)iteration;
        int want = (phase == Phase::first_flood) ? 1 : clue;
        std::vector<Cell> cand = cells_with(board, want);
        if (phase == Phase::first_flood && flood1_shape) {
            PrivateScope prover;
            Direction d = (r_ == 0) ? Direction::bottom : Direction::right;
            std::erase_if(cand, [&](Cell c) {
                Cell nb = step(c, d);
                if (flood1_shape->count(nb) == 0) return true;
                return board.at(nb).covert_value() != 0;
            });
        }
        if (cand.empty()) throw DeadBranch{};
        return cand.at(pick(static_cast<int>(cand.size())));
    }

private:
    int pick(int options) {
        if (options <= 0) throw DeadBranch{};
        if (options == 1) return 0;
        domains.push_back(options);
        if (pos_ < script_.size()) return script_[pos_++];
        throw ScriptExhausted{options};
    }

    static std::vector<Cell> cells_with(const Board& board, int value) {
        PrivateScope prover;
        std::vector<Cell> out;
        const BoardGeometry& geom = board.geometry();
        for (int r = 1; r <= geom.m; ++r)
            for (int c = 1; c <= geom.n; ++c)
                if (board.at(Cell{r, c}).covert_value() == value)
                    out.push_back({r, c});
        return out;
    }

    const std::vector<int>& script_;
    std::size_t pos_ = 0;
    int r_ = 0;
};

struct RunOutcome {
    enum Kind { accepted, rejected, exhausted } kind = rejected;
    int frontier_options = 0;
    std::vector<int> domains;
    bool reached_second = false;
    std::vector<int> coloring;
};

// Backtracking over choice scripts: extend at the frontier, advance the
// deepest undecided choice after each completed run.
void for_each_strategy(
    const std::function<RunOutcome(const std::vector<int>&)>& run,
    const std::function<void(const RunOutcome&)>& on_complete) {
    std::vector<int> script;
    for (;;) {
        RunOutcome out = run(script);
        if (out.kind == RunOutcome::exhausted) {
            script.push_back(0);
            continue;
        }
        on_complete(out);
        script.resize(out.domains.size());
        bool advanced = false;
        while (!script.empty()) {
            std::size_t depth = script.size() - 1;
            if (script.back() + 1 < out.domains[depth]) {
                ++script.back();
                advanced = true;
                break;
            }
            script.pop_back();
        }
        if (!advanced) break;
    }
}

RunOutcome run_scripted(const Puzzle& puzzle, const std::vector<int>& script,
                        const std::set<Cell>* flood1_shape) {
    ShuffleSource src = ShuffleSource::constant(0);
    TableRun table(puzzle, src);
    ScriptedProver prover(script);
    prover.flood1_shape = flood1_shape;
    RunOutcome out;
    try {
        Verdict verdict = table.verify(prover);
        out.kind = verdict.accepted ? RunOutcome::accepted : RunOutcome::rejected;
        if (verdict.accepted) out.coloring = table.board().covert_interior_values();
    } catch (const ScriptExhausted& e) {
        out.kind = RunOutcome::exhausted;
        out.frontier_options = e.options;
    } catch (const DeadBranch&) {
        out.kind = RunOutcome::rejected;
    }
    out.domains = prover.domains;
    out.reached_second = prover.reached_second;
    return out;
}

}  // namespace

EnumerationResult enumerate_accepting_paths(const Puzzle& puzzle, int max_cells) {
    if (puzzle.cell_count() > max_cells)
        throw size_error("exhaustive enumeration is limited to " +
                         std::to_string(max_cells) + " cells");
    EnumerationResult result;
    for_each_strategy(
        [&](const std::vector<int>& script) {
            return run_scripted(puzzle, script, nullptr);
        },
        [&](const RunOutcome& out) {
            ++result.paths;
            if (out.kind == RunOutcome::accepted) {
                ++result.accepting;
                result.colorings.insert(out.coloring);
            }
        });
    return result;
}

std::vector<int> coloring_of_partition(const Puzzle& puzzle,
                                       const Partition& partition) {
    std::vector<int> coloring(puzzle.cell_count(), 0);
    for (const auto& [index, rect] : partition.rects)
        for (int r = rect.top_left.row; r <= rect.bottom_right.row; ++r)
            for (int c = rect.top_left.col; c <= rect.bottom_right.col; ++c)
                coloring[(r - 1) * puzzle.cols() + (c - 1)] = index;
    for (int v : coloring)
        if (v == 0)
            throw std::invalid_argument("partition does not tile the grid");
    return coloring;
}

int Staircase::area() const {
    int total = 0;
    for (int len : lengths) total += len;
    return total;
}

bool Staircase::is_rectangle() const {
    for (int len : lengths)
        if (len != lengths.front()) return false;
    return true;
}

StaircaseOutcome staircase_attack(const Staircase& shape, int grid_rows,
                                  int grid_cols) {
    if (shape.lengths.empty())
        throw std::invalid_argument("staircase needs at least one bar");
    if (static_cast<int>(shape.lengths.size()) > grid_rows)
        throw std::invalid_argument("staircase taller than the grid");
    std::set<Cell> cells;
    for (int r = 0; r < static_cast<int>(shape.lengths.size()); ++r) {
        if (shape.lengths[r] < 1 || shape.lengths[r] > grid_cols)
            throw std::invalid_argument("bar length outside the grid");
        for (int c = 1; c <= shape.lengths[r]; ++c) cells.insert({r + 1, c});
    }

    // A single clue whose value is the staircase's area, on a cell of the
    // shape; the floods must then form the shape and convert it.
    Puzzle puzzle(grid_rows, grid_cols, {{2, {1, 1}, shape.area()}});

    StaircaseOutcome outcome;
    for_each_strategy(
        [&](const std::vector<int>& script) {
            return run_scripted(puzzle, script, &cells);
        },
        [&](const RunOutcome& out) {
            ++outcome.paths;
            outcome.flood1_reachable |= out.reached_second;
            outcome.accepted |= (out.kind == RunOutcome::accepted);
        });
    return outcome;
}

// --------------------------------------------------------------------------
// Distribution tests
// --------------------------------------------------------------------------

bool ZkReport::distributions_pass() const {
    for (const RevealClassStat& c : classes) {
        if (c.uniform_a.p_value <= alpha) return false;
        if (c.uniform_b.p_value <= alpha) return false;
        if (c.two_sample.p_value <= alpha) return false;
    }
    return !classes.empty();
}

nlohmann::json ZkReport::to_json() const {
    nlohmann::json classes_json = nlohmann::json::array();
    for (const RevealClassStat& c : classes) {
        nlohmann::json j;
        j["key"] = c.key;
        j["width"] = c.width;
        j["uniform_a"] = {{"statistic", c.uniform_a.statistic},
                          {"df", c.uniform_a.df},
                          {"p", c.uniform_a.p_value}};
        j["uniform_b"] = {{"statistic", c.uniform_b.statistic},
                          {"df", c.uniform_b.df},
                          {"p", c.uniform_b.p_value}};
        j["two_sample"] = {{"statistic", c.two_sample.statistic},
                           {"df", c.two_sample.df},
                           {"p", c.two_sample.p_value}};
        classes_json.push_back(std::move(j));
    }
    return nlohmann::json{{"exact_match", exact_match},
                          {"simulator_match", simulator_match},
                          {"alpha", alpha},
                          {"trials", trials},
                          {"classes", std::move(classes_json)},
                          {"pass", all_pass()}};
}

namespace {

std::string canonical_of_run(const Puzzle& puzzle, const Partition& partition,
                             std::uint64_t seed) {
    HonestProver prover(puzzle, partition);
    ShuffleSource src = ShuffleSource::seeded(seed);
    VerifyResult result = verify_shikaku(puzzle, prover, src);
    if (!result.verdict.accepted)
        throw std::logic_error("honest run rejected: " + result.verdict.reason);
    return canonical_reveal_string(result.transcript.verifier_view());
}

}  // namespace

ZkReport zk_distribution_test(const Puzzle& puzzle, const Partition& a,
                              const Partition& b, int trials,
                              std::uint64_t seed, double alpha) {
    for (const Partition* p : {&a, &b}) {
        CheckResult check = check_solution(puzzle, *p);
        if (!check.accepted() || !check.tiles_grid)
            throw std::invalid_argument("invalid partition: " + check.message);
    }

    ZkReport report;
    report.alpha = alpha;
    report.trials = trials;

    // Exact part: the canonical reveal sequence is a function of the
    // puzzle alone.
    std::string canon_a = canonical_of_run(puzzle, a, trial_seed(seed, 1, 0));
    std::string canon_b = canonical_of_run(puzzle, b, trial_seed(seed, 2, 0));
    ShuffleSource sim_src = ShuffleSource::seeded(trial_seed(seed, 3, 0));
    std::string canon_sim =
        canonical_reveal_string(simulate_transcript(puzzle, sim_src));
    report.exact_match = (canon_a == canon_b);
    report.simulator_match = (canon_a == canon_sim);

    // Positional part: per-class histograms of the revealed 1 positions.
    struct Accumulator {
        int width = 0;
        std::vector<long> a, b;
    };
    std::vector<std::string> keys;
    std::map<std::string, Accumulator> hist;

    auto accumulate = [&](const Partition& partition, bool into_a,
                          std::uint64_t salt) {
        for (int t = 0; t < trials; ++t) {
            HonestProver prover(puzzle, partition);
            ShuffleSource src = ShuffleSource::seeded(trial_seed(seed, salt, t));
            VerifyResult result = verify_shikaku(puzzle, prover, src);
            if (!result.verdict.accepted)
                throw std::logic_error("honest run rejected during trials");
            for (const RevealPosition& rp :
                 reveal_positions(result.transcript.verifier_view())) {
                auto [it, fresh] = hist.try_emplace(rp.key);
                if (fresh) {
                    it->second.width = rp.width;
                    it->second.a.assign(rp.width, 0);
                    it->second.b.assign(rp.width, 0);
                    keys.push_back(rp.key);
                }
                (into_a ? it->second.a : it->second.b)[rp.position] += 1;
            }
        }
    };
    accumulate(a, true, 11);
    accumulate(b, false, 12);

    for (const std::string& key : keys) {
        const Accumulator& acc = hist.at(key);
        RevealClassStat stat;
        stat.key = key;
        stat.width = acc.width;
        stat.hist_a = acc.a;
        stat.hist_b = acc.b;
        stat.uniform_a = chi_square_uniform(acc.a);
        stat.uniform_b = chi_square_uniform(acc.b);
        stat.two_sample = chi_square_two_sample(acc.a, acc.b);
        report.classes.push_back(std::move(stat));
    }
    return report;
}

ExactUniformity exact_position_enumeration(const Puzzle& puzzle,
                                           const Partition& partition,
                                           long max_runs) {
    ExactUniformity result;

    // Learn the run's draw structure first.
    std::vector<int> widths;
    {
        HonestProver prover(puzzle, partition);
        ShuffleSource src = ShuffleSource::seeded(0);
        src.record_widths(&widths);
        VerifyResult first = verify_shikaku(puzzle, prover, src);
        if (!first.verdict.accepted)
            throw std::invalid_argument("partition must verify");
    }
    result.draws = static_cast<int>(widths.size());
    long total = 1;
    for (int w : widths) {
        total *= w;
        if (total > max_runs) return result;  // checked stays false
    }
    result.checked = true;
    result.runs = total;

    std::map<std::string, std::vector<long>> hist;
    std::vector<int> offsets(widths.size(), 0);
    for (long run = 0; run < total; ++run) {
        HonestProver prover(puzzle, partition);
        ShuffleSource src = ShuffleSource::scripted(offsets);
        VerifyResult r = verify_shikaku(puzzle, prover, src);
        if (!r.verdict.accepted)
            throw std::logic_error("honest run rejected under scripted offsets");
        for (const RevealPosition& rp :
             reveal_positions(r.transcript.verifier_view())) {
            auto [it, fresh] = hist.try_emplace(rp.key);
            if (fresh) it->second.assign(rp.width, 0);
            it->second[rp.position] += 1;
        }
        // Next offset tuple (mixed radix).
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            if (++offsets[i] < widths[i]) break;
            offsets[i] = 0;
        }
    }

    result.uniform = !hist.empty();
    for (const auto& [key, counts] : hist)
        for (long c : counts)
            if (c != counts.front()) result.uniform = false;
    return result;
}

// --------------------------------------------------------------------------
// Acceptance audit
// --------------------------------------------------------------------------

bool AuditReport::all_passed() const {
    for (const AuditCriterion& c : criteria)
        if (!c.passed) return false;
    return !criteria.empty();
}

std::string AuditReport::table() const {
    std::ostringstream out;
    for (const AuditCriterion& c : criteria) {
        char timing[32];
        std::snprintf(timing, sizeof timing, "%7.2fs", c.seconds);
        out << (c.passed ? "[PASS]" : "[FAIL]") << ' ' << timing << "  "
            << c.name << " — " << c.detail << '\n';
    }
    out << (all_passed() ? "all criteria passed" : "SOME CRITERIA FAILED")
        << '\n';
    return out.str();
}

nlohmann::json AuditReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const AuditCriterion& c : criteria) {
        nlohmann::json j{{"name", c.name},
                         {"passed", c.passed},
                         {"detail", c.detail},
                         {"seconds", c.seconds}};
        if (!c.extra.is_null()) j["report"] = c.extra;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"criteria", std::move(arr)}, {"pass", all_passed()}};
}

namespace {

struct CriterionTimer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

AuditCriterion audit_completeness(const AuditConfig& cfg) {
    CriterionTimer timer;
    AuditCriterion crit{"completeness", true, "", 0.0};
    long runs = 0, rejects = 0;

    auto sweep = [&](const Puzzle& puzzle, const Partition& partition) {
        for (int s = 1; s <= cfg.completeness_seeds; ++s) {
            HonestProver prover(puzzle, partition);
            ShuffleSource src = ShuffleSource::seeded(trial_seed(cfg.seed, 21, s));
            VerifyResult result = verify_shikaku(puzzle, prover, src);
            ++runs;
            if (!result.verdict.accepted) ++rejects;
        }
    };

    sweep(example_7x7_puzzle(), example_7x7_solution());
    for (const Fixture& f : completeness_fixtures())
        for (const Partition& p : solve_brute_force(f.puzzle)) sweep(f.puzzle, p);

    crit.seconds = timer.elapsed();
    crit.passed = (rejects == 0) && runs > 0 && crit.seconds < 30.0;
    crit.detail = std::to_string(runs) + " honest runs, " +
                  std::to_string(rejects) + " rejections (budget 30s)";
    return crit;
}

AuditCriterion audit_soundness(const AuditConfig&) {
    CriterionTimer timer;
    AuditCriterion crit{"soundness", true, "", 0.0};
    std::ostringstream detail;
    long total_paths = 0;

    for (const Fixture& f : soundness_fixtures()) {
        EnumerationResult enumerated = enumerate_accepting_paths(f.puzzle);
        std::set<std::vector<int>> expected;
        for (const Partition& p : solve_brute_force(f.puzzle))
            expected.insert(coloring_of_partition(f.puzzle, p));
        total_paths += enumerated.paths;
        if (enumerated.colorings != expected) {
            crit.passed = false;
            detail << f.name << ": " << enumerated.colorings.size()
                   << " accepting colorings vs " << expected.size()
                   << " solutions; ";
        }
    }

    StaircaseOutcome fig5 = staircase_attack(Staircase{{2, 4, 1, 3}}, 4, 4);
    StaircaseOutcome low = staircase_attack(Staircase{{2, 2, 3}}, 3, 3);
    StaircaseOutcome control = staircase_attack(Staircase{{3, 3}}, 2, 3);
    if (fig5.accepted || low.accepted || !control.accepted) crit.passed = false;

    crit.seconds = timer.elapsed();
    if (crit.seconds >= 300.0) crit.passed = false;
    detail << "enumerated " << total_paths << " strategy paths; staircases "
           << (fig5.accepted ? "ACCEPTED" : "rejected") << "/"
           << (low.accepted ? "ACCEPTED" : "rejected") << ", rectangle control "
           << (control.accepted ? "accepted" : "REJECTED") << " (budget 300s)";
    crit.detail = detail.str();
    return crit;
}

AuditCriterion audit_zero_knowledge(const AuditConfig& cfg) {
    CriterionTimer timer;
    AuditCriterion crit{"zero_knowledge", true, "", 0.0};

    const Puzzle& puzzle = two_solution_puzzle();
    std::vector<Partition> solutions = solve_brute_force(puzzle);
    if (solutions.size() != 2)
        throw std::logic_error("the two-solution fixture must have 2 solutions");
    ZkReport report = zk_distribution_test(puzzle, solutions[0], solutions[1],
                                           cfg.zk_trials, cfg.seed, cfg.alpha);

    const Puzzle& tiny = soundness_fixtures().front().puzzle;  // 1x1
    std::vector<Partition> tiny_solutions = solve_brute_force(tiny);
    ExactUniformity exact =
        exact_position_enumeration(tiny, tiny_solutions.at(0));

    crit.passed = report.all_pass() && exact.checked && exact.uniform;
    crit.extra = report.to_json();
    std::ostringstream detail;
    double min_p = 1.0;
    for (const RevealClassStat& c : report.classes)
        min_p = std::min({min_p, c.uniform_a.p_value, c.uniform_b.p_value,
                          c.two_sample.p_value});
    detail << "canonical sequences " << (report.exact_match ? "equal" : "DIFFER")
           << ", simulator " << (report.simulator_match ? "equal" : "DIFFERS")
           << ", " << report.classes.size() << " reveal classes, min p = "
           << min_p << "; 1x1 exact enumeration over " << exact.runs
           << " offset tuples " << (exact.uniform ? "uniform" : "NOT uniform");
    crit.detail = detail.str();
    crit.seconds = timer.elapsed();
    return crit;
}

AuditCriterion audit_subprotocols(const AuditConfig&) {
    CriterionTimer timer;
    AuditCriterion crit{"subprotocol_exactness", true, "", 0.0};
    long cases = 0;

    // add_mod3 against plain arithmetic, all inputs, all offsets.
    for (int r = 0; r < 3 && crit.passed; ++r)
        for (int s = 0; s < 3 && crit.passed; ++s)
            for (int x = 0; x < 3 && crit.passed; ++x) {
                Inventory inv;
                inv.per_value = {{0, 8}, {1, 4}};
                CardPool pool(inv);
                Transcript t;
                ShuffleSource src = ShuffleSource::scripted({x});
                EncodedInt er = assemble_encoding(pool, r, 3);
                EncodedInt es = assemble_encoding(pool, s, 3);
                std::string error;
                auto sum = add_mod3(std::move(er), std::move(es), pool, t, src,
                                    &error);
                ++cases;
                if (!sum || sum->covert_decode() != (r + s) % 3)
                    crit.passed = false;
            }

    // chosen cut: selection correctness and restoration, exhaustively.
    for (int q = 1; q <= 8 && crit.passed; ++q)
        for (int i = 0; i < q && crit.passed; ++i)
            for (int x1 = 0; x1 < q && crit.passed; ++x1)
                for (int x2 = 0; x2 < q && crit.passed; ++x2) {
                    Inventory inv;
                    inv.per_value = {{0, 3 * q}, {1, 2}};
                    CardPool pool(inv);
                    Transcript t;
                    ShuffleSource src = ShuffleSource::scripted({x1, x2});

                    std::vector<Card> sequence;
                    std::vector<std::uint32_t> ids;
                    for (int n = 0; n < q; ++n) {
                        sequence.push_back(pool.take(0));
                        ids.push_back(sequence.back().id());
                    }
                    std::vector<Card> selector;
                    for (int n = 0; n < q; ++n)
                        selector.push_back(pool.take(n == i ? 1 : 0));

                    std::string error;
                    auto cut = ChosenCut::open(std::move(sequence),
                                               std::move(selector), pool, t, src,
                                               &error);
                    ++cases;
                    if (!cut) {
                        crit.passed = false;
                        break;
                    }
                    if (cut->peek_card(cut->selected_col()).id() != ids[i])
                        crit.passed = false;
                    auto closed = cut->close(pool, t, src, &error);
                    if (!closed) {
                        crit.passed = false;
                        break;
                    }
                    for (int n = 0; n < q; ++n)
                        if (closed->sequence[n].id() != ids[n])
                            crit.passed = false;
                }

    // negate_mod3 is an involution on all three encodings.
    for (int v = 0; v < 3 && crit.passed; ++v) {
        Inventory inv;
        inv.per_value = {{0, 4}, {1, 2}};
        CardPool pool(inv);
        EncodedInt e = assemble_encoding(pool, v, 3);
        negate_mod3(e);
        if (e.covert_decode() != (3 - v) % 3) crit.passed = false;
        negate_mod3(e);
        if (e.covert_decode() != v) crit.passed = false;
        ++cases;
    }

    crit.detail = std::to_string(cases) + " exhaustive cases";
    crit.seconds = timer.elapsed();
    return crit;
}

AuditCriterion audit_card_count(const AuditConfig&) {
    CriterionTimer timer;
    AuditCriterion crit{"card_count", true, "", 0.0};
    std::ostringstream detail;
    for (const Fixture& f : domino_fixtures()) {
        Inventory inv = inventory(f.puzzle);
        int mn = f.puzzle.cell_count();
        if (inv.total > 18 * mn + 29) crit.passed = false;
        // The components must also add up to the documented formula.
        int expected = inv.dummies + inv.board_zeros + inv.flood_ones +
                       inv.helper_zeros + inv.helper_ones + inv.clue_cards;
        if (inv.total != expected) crit.passed = false;
        detail << f.name << ": " << inv.total << " <= " << (18 * mn + 29) << "; ";
    }
    crit.detail = detail.str();
    crit.seconds = timer.elapsed();
    return crit;
}

AuditCriterion audit_determinism(const AuditConfig& cfg) {
    CriterionTimer timer;
    AuditCriterion crit{"determinism", true, "", 0.0};

    auto run_json = [&](bool audit_view) {
        HonestProver prover(example_7x7_puzzle(), example_7x7_solution());
        ShuffleSource src = ShuffleSource::seeded(cfg.seed);
        VerifyResult result = verify_shikaku(example_7x7_puzzle(), prover, src);
        const Transcript& t = result.transcript;
        return audit_view ? t.to_json_string()
                          : t.verifier_view().to_json_string();
    };
    bool verifier_equal = run_json(false) == run_json(false);
    bool audit_equal = run_json(true) == run_json(true);
    crit.passed = verifier_equal && audit_equal;
    crit.detail = std::string("verifier view ") +
                  (verifier_equal ? "byte-identical" : "DIFFERS") +
                  ", audit view " + (audit_equal ? "byte-identical" : "DIFFERS");
    crit.seconds = timer.elapsed();
    return crit;
}

}  // namespace

AuditReport run_acceptance_audit(const AuditConfig& config) {
    AuditReport report;
    report.criteria.push_back(audit_completeness(config));
    report.criteria.push_back(audit_soundness(config));
    report.criteria.push_back(audit_zero_knowledge(config));
    report.criteria.push_back(audit_subprotocols(config));
    report.criteria.push_back(audit_card_count(config));
    report.criteria.push_back(audit_determinism(config));
    return report;
}

}  // namespace shikaku
