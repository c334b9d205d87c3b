// Command-line front end; talks to the engine through the C API only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shikaku.h"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(int status) {
    switch (status) {
        case SHK_OK: return kExitAccept;
        case SHK_REJECT: return kExitReject;
        case SHK_ERR_PARSE:
        case SHK_ERR_ARGUMENT:
        case SHK_ERR_LIMIT: return kExitUsage;
        default: return kExitInternal;
    }
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { shk_free(value); }
    std::string str() const { return value ? value : ""; }
};

bool read_file(const std::string& path, std::string* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = buffer.str();
    return true;
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

struct PuzzleHandle {
    shk_puzzle* ptr = nullptr;
    ~PuzzleHandle() { shk_puzzle_free(ptr); }
};

struct PartitionHandle {
    shk_partition* ptr = nullptr;
    ~PartitionHandle() { shk_partition_free(ptr); }
};

int load_puzzle(const std::string& path, PuzzleHandle* handle) {
    std::string text;
    if (!read_file(path, &text)) {
        std::cerr << "cannot read puzzle file: " << path << "\n";
        return kExitUsage;
    }
    OwnedString error;
    int status = shk_puzzle_parse(text.c_str(), &handle->ptr, &error.value);
    if (status != SHK_OK) {
        std::cerr << path << ": " << error.str() << "\n";
        return exit_code_for(status);
    }
    return kExitAccept;
}

int load_partition(const PuzzleHandle& puzzle, const std::string& path,
                   PartitionHandle* handle) {
    std::string text;
    if (!read_file(path, &text)) {
        std::cerr << "cannot read solution file: " << path << "\n";
        return kExitUsage;
    }
    OwnedString error;
    int status =
        shk_partition_parse(puzzle.ptr, text.c_str(), &handle->ptr, &error.value);
    if (status != SHK_OK) {
        std::cerr << path << ": " << error.str() << "\n";
        return exit_code_for(status);
    }
    return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Card-based zero-knowledge proof engine for Shikaku puzzles"};
    app.require_subcommand(1);

    std::string puzzle_path, solution_path, out_path;
    std::uint64_t seed = 1;
    int trials = 0;
    int audit_seeds = 0;
    int max_cells = 25;
    int limit = 0;
    std::string view = "verifier";

    CLI::App* solve = app.add_subcommand("solve", "Enumerate all solutions");
    solve->add_option("--puzzle", puzzle_path, "puzzle file")->required();
    solve->add_option("--max-cells", max_cells, "solver size bound (cells)");
    solve->add_option("--limit", limit, "return at most this many solutions");
    solve->add_option("--out", out_path, "write solutions here instead of stdout");

    CLI::App* check = app.add_subcommand("check", "Run the plain validity oracle");
    check->add_option("--puzzle", puzzle_path, "puzzle file")->required();
    check->add_option("--solution", solution_path, "solution file")->required();

    CLI::App* zkp = app.add_subcommand(
        "zkp", "Run the interactive zero-knowledge verification");
    zkp->add_option("--puzzle", puzzle_path, "puzzle file")->required();
    zkp->add_option("--solution", solution_path, "solution file")->required();
    zkp->add_option("--seed", seed, "shuffle seed");
    zkp->add_option("--view", view, "transcript view: verifier|audit")
        ->check(CLI::IsMember({"verifier", "audit"}));
    zkp->add_option("--out", out_path, "write the transcript JSON here");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Emit a simulated verifier view (no solution involved)");
    simulate->add_option("--puzzle", puzzle_path, "puzzle file")->required();
    simulate->add_option("--seed", seed, "position seed");
    simulate->add_option("--out", out_path, "write the transcript JSON here");

    std::uint64_t audit_seed = 0;
    CLI::App* audit = app.add_subcommand(
        "audit", "Run the built-in completeness/soundness/zero-knowledge suites");
    audit->add_option("--seed", audit_seed, "suite seed (0 = built-in default)");
    audit->add_option("--trials", trials, "statistical trials (0 = default 2000)");
    audit->add_option("--seeds", audit_seeds,
                      "completeness seeds per fixture (0 = default 100)");
    audit->add_option("--out", out_path, "write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (solve->parsed()) {
        PuzzleHandle puzzle;
        if (int rc = load_puzzle(puzzle_path, &puzzle)) return rc;
        shk_partition** partitions = nullptr;
        int count = 0;
        OwnedString error;
        int status = shk_solve(puzzle.ptr, max_cells, limit, &partitions, &count,
                               &error.value);
        if (status != SHK_OK) {
            std::cerr << error.str() << "\n";
            return exit_code_for(status);
        }
        std::ostringstream body;
        for (int i = 0; i < count; ++i) {
            OwnedString text{shk_partition_format(partitions[i])};
            if (i) body << "\n";
            body << text.str();
        }
        shk_partitions_free(partitions, count);
        if (!write_output(out_path, body.str())) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        std::cerr << count << " solution(s)\n";
        return count > 0 ? kExitAccept : kExitReject;
    }

    if (check->parsed()) {
        PuzzleHandle puzzle;
        if (int rc = load_puzzle(puzzle_path, &puzzle)) return rc;
        PartitionHandle partition;
        if (int rc = load_partition(puzzle, solution_path, &partition)) return rc;
        OwnedString message;
        int status = shk_check(puzzle.ptr, partition.ptr, &message.value);
        std::cout << message.str() << "\n";
        return exit_code_for(status);
    }

    if (zkp->parsed()) {
        PuzzleHandle puzzle;
        if (int rc = load_puzzle(puzzle_path, &puzzle)) return rc;
        PartitionHandle partition;
        if (int rc = load_partition(puzzle, solution_path, &partition)) return rc;
        OwnedString transcript, error;
        int status = shk_verify(puzzle.ptr, partition.ptr, seed,
                                view == "audit" ? 1 : 0, &transcript.value,
                                &error.value);
        if (status != SHK_OK && status != SHK_REJECT) {
            std::cerr << error.str() << "\n";
            return exit_code_for(status);
        }
        if (!write_output(out_path, transcript.str() + "\n")) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        std::cerr << (status == SHK_OK ? "accept" : "reject") << "\n";
        return exit_code_for(status);
    }

    if (simulate->parsed()) {
        PuzzleHandle puzzle;
        if (int rc = load_puzzle(puzzle_path, &puzzle)) return rc;
        OwnedString transcript, error;
        int status =
            shk_simulate(puzzle.ptr, seed, &transcript.value, &error.value);
        if (status != SHK_OK) {
            std::cerr << error.str() << "\n";
            return exit_code_for(status);
        }
        if (!write_output(out_path, transcript.str() + "\n")) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        return kExitAccept;
    }

    if (audit->parsed()) {
        OwnedString report, summary, error;
        int status = shk_audit(audit_seed, trials, audit_seeds, &report.value,
                               &summary.value, &error.value);
        if (status != SHK_OK && status != SHK_REJECT) {
            std::cerr << error.str() << "\n";
            return exit_code_for(status);
        }
        std::cout << summary.str();
        if (!out_path.empty() && !write_output(out_path, report.str() + "\n")) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        return exit_code_for(status);
    }

    return kExitUsage;
}
