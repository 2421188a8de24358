#pragma once
// Runtime knobs shared by the CLI subcommands. Values come from an optional
// JSON config file; command-line flags override file values. The process
// environment is never consulted.

#include <string>

namespace schur {

struct Config {
    int brute_cap = 26;        // exhaustive search size cap
    int max_witnesses = 16;    // witnesses kept by the exhaustive search
    int grid = 400;            // minimize_area grid intervals per axis
    int window = 25;           // half-width of windowed block searches
    int threads = 0;           // 0 = hardware concurrency
    double sweep_flag_tol = 1e-6;

    // Parses the file and overwrites the matching fields. Unknown keys and
    // out-of-range values are errors (std::invalid_argument).
    static Config load(const std::string& path);
};

}  // namespace schur
