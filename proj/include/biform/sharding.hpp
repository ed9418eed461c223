#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "biform/int128.hpp"
#include "biform/rng.hpp"

namespace biform {

// Deterministic work partition: every logical unit is hashed to exactly one
// shard, each shard total is an exact integer sum, so the grand total is
// independent of the shard count and of thread scheduling.
inline bool shard_owns(u64 unit_key, int shard, int shards) {
    if (shards <= 1) return true;
    return static_cast<int>(mix64(unit_key) % static_cast<u64>(shards)) == shard;
}

inline i64 sum_over_shards(int shards, const std::function<i64(int)>& shard_sum) {
    if (shards <= 1) return shard_sum(0);
    std::vector<i64> partial(static_cast<std::size_t>(shards), 0);
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(shards));
    std::atomic<int> next{0};
    auto work = [&]() {
        int s;
        while ((s = next.fetch_add(1)) < shards) partial[static_cast<std::size_t>(s)] = shard_sum(s);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    i64 total = 0;
    for (i64 p : partial) total += p;
    return total;
}

} // namespace biform
