#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "biform/int128.hpp"

namespace biform::cli {

// Exit codes: 0 success, 1 hard-assertion failure, 2 usage error,
// 3 resource guard tripped.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kResourceGuard = 3 };

struct RunConfig {
    std::string command;                      // count, verify-bijection, bounds, solvable, sk, fit, parametrize
    i64 bound = 100;                          // count
    i64 bmax = 1024;                          // verify-bijection grid cap
    std::string method = "fiber";
    int shards = 1;
    std::uint64_t seed = 1;
    i64 sieve_limit = 0;                      // 0: $BIFORM_SIEVE_LIMIT or 10^7
    double eps = 1.0 / 6.0;
    std::string output_path = "-";            // "-" = stdout
    std::string format = "csv";               // csv | json
    int lemma = 1;                            // bounds
    int samples = 1000;
    int maxpow = 6;
    bool zero_elapsed = false;                // reproducible output files
    std::array<i64, 3> conic{0, 0, 0};        // solvable
    std::array<i64, 6> point{0, 0, 0, 0, 0, 0};  // parametrize
    std::vector<i64> fit_bounds;              // fit (default 10^3..10^5)
    i64 sk_bmax = 1'000'000;                  // sk sample cap
};

int run(const RunConfig& config);

// argv front end; builds a RunConfig and calls run().
int main_entry(int argc, char** argv);

} // namespace biform::cli
