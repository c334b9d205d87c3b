#include "shikaku.h"

#include <cstring>
#include <new>
#include <string>

#include "fixtures.hpp"
#include "protocol.hpp"
#include "puzzle.hpp"
#include "zk.hpp"

using namespace shikaku;

struct shk_puzzle {
    Puzzle puzzle;
};
struct shk_partition {
    Partition partition;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** slot, const std::string& message) {
    if (slot) *slot = dup_string(message);
}

// Maps C++ failures to status codes; runs `fn` and stores its status.
template <typename Fn>
int guarded(char** error, Fn&& fn) {
    if (error) *error = nullptr;
    try {
        return fn();
    } catch (const parse_error& e) {
        set_error(error, e.what());
        return SHK_ERR_PARSE;
    } catch (const size_error& e) {
        set_error(error, e.what());
        return SHK_ERR_LIMIT;
    } catch (const std::invalid_argument& e) {
        set_error(error, e.what());
        return SHK_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SHK_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* shk_status_name(int status) {
    switch (status) {
        case SHK_OK: return "ok";
        case SHK_REJECT: return "reject";
        case SHK_ERR_PARSE: return "parse_error";
        case SHK_ERR_ARGUMENT: return "argument_error";
        case SHK_ERR_LIMIT: return "limit_error";
        case SHK_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

void shk_free(char* s) { ::operator delete(s); }

int shk_puzzle_parse(const char* text, shk_puzzle** out, char** error) {
    if (!text || !out) return SHK_ERR_ARGUMENT;
    *out = nullptr;
    return guarded(error, [&]() {
        *out = new shk_puzzle{parse_puzzle(text)};
        return SHK_OK;
    });
}

void shk_puzzle_free(shk_puzzle* puzzle) { delete puzzle; }

char* shk_puzzle_format(const shk_puzzle* puzzle) {
    if (!puzzle) return nullptr;
    return dup_string(format_puzzle(puzzle->puzzle));
}

int shk_puzzle_rows(const shk_puzzle* puzzle) {
    return puzzle ? puzzle->puzzle.rows() : 0;
}
int shk_puzzle_cols(const shk_puzzle* puzzle) {
    return puzzle ? puzzle->puzzle.cols() : 0;
}
int shk_puzzle_clue_count(const shk_puzzle* puzzle) {
    return puzzle ? puzzle->puzzle.clue_count() : 0;
}

int shk_partition_parse(const shk_puzzle* puzzle, const char* text,
                        shk_partition** out, char** error) {
    if (!puzzle || !text || !out) return SHK_ERR_ARGUMENT;
    *out = nullptr;
    return guarded(error, [&]() {
        *out = new shk_partition{parse_partition(puzzle->puzzle, text)};
        return SHK_OK;
    });
}

void shk_partition_free(shk_partition* partition) { delete partition; }

char* shk_partition_format(const shk_partition* partition) {
    if (!partition) return nullptr;
    return dup_string(format_partition(partition->partition));
}

int shk_check(const shk_puzzle* puzzle, const shk_partition* partition,
              char** message) {
    if (!puzzle || !partition) return SHK_ERR_ARGUMENT;
    return guarded(message, [&]() {
        CheckResult result = check_solution(puzzle->puzzle, partition->partition);
        std::string text = result.message;
        if (result.accepted() && !result.tiles_grid) {
            text += " (clue values do not sum to the cell count, so the "
                    "rectangles cannot tile the grid)";
        }
        if (message) *message = dup_string(text);
        return (result.accepted() && result.tiles_grid) ? SHK_OK : SHK_REJECT;
    });
}

int shk_solve(const shk_puzzle* puzzle, int max_cells, int limit,
              shk_partition*** partitions, int* count, char** error) {
    if (!puzzle || !partitions || !count) return SHK_ERR_ARGUMENT;
    *partitions = nullptr;
    *count = 0;
    return guarded(error, [&]() {
        std::vector<Partition> found = solve_brute_force(
            puzzle->puzzle, limit > 0 ? static_cast<std::size_t>(limit) : SIZE_MAX,
            max_cells > 0 ? max_cells : 25);
        *count = static_cast<int>(found.size());
        if (!found.empty()) {
            *partitions = new shk_partition*[found.size()];
            for (std::size_t i = 0; i < found.size(); ++i)
                (*partitions)[i] = new shk_partition{std::move(found[i])};
        }
        return SHK_OK;
    });
}

void shk_partitions_free(shk_partition** partitions, int count) {
    if (!partitions) return;
    for (int i = 0; i < count; ++i) delete partitions[i];
    delete[] partitions;
}

int shk_verify(const shk_puzzle* puzzle, const shk_partition* partition,
               uint64_t seed, int audit_view, char** transcript_json,
               char** error) {
    if (!puzzle || !partition) return SHK_ERR_ARGUMENT;
    return guarded(error, [&]() {
        // Best-effort prover: a wrong solution still runs and gets
        // rejected by the verifier rather than refused up front.
        HonestProver prover(puzzle->puzzle, partition->partition,
                            /*strict=*/false);
        ShuffleSource src = ShuffleSource::seeded(seed);
        VerifyResult result = verify_shikaku(puzzle->puzzle, prover, src);
        if (transcript_json) {
            const Transcript& t = result.transcript;
            *transcript_json = dup_string(
                audit_view ? t.to_json_string()
                           : t.verifier_view().to_json_string());
        }
        return result.verdict.accepted ? SHK_OK : SHK_REJECT;
    });
}

int shk_simulate(const shk_puzzle* puzzle, uint64_t seed,
                 char** transcript_json, char** error) {
    if (!puzzle) return SHK_ERR_ARGUMENT;
    return guarded(error, [&]() {
        if (puzzle->puzzle.clue_sum() != puzzle->puzzle.cell_count()) {
            set_error(error,
                      "clue values do not sum to the cell count; no accepting "
                      "transcript exists to simulate");
            return SHK_REJECT;
        }
        ShuffleSource src = ShuffleSource::seeded(seed);
        Transcript t = simulate_transcript(puzzle->puzzle, src);
        if (transcript_json) *transcript_json = dup_string(t.to_json_string());
        return SHK_OK;
    });
}

int shk_audit(uint64_t seed, int trials, int seeds, char** report_json,
              char** summary_text, char** error) {
    return guarded(error, [&]() {
        AuditConfig config;
        if (seed) config.seed = seed;
        if (trials > 0) config.zk_trials = trials;
        if (seeds > 0) config.completeness_seeds = seeds;
        AuditReport report = run_acceptance_audit(config);
        if (report_json) *report_json = dup_string(report.to_json().dump(2));
        if (summary_text) *summary_text = dup_string(report.table());
        return report.all_passed() ? SHK_OK : SHK_REJECT;
    });
}

}  // extern "C"
