#pragma once

#include <cstdint>
#include <random>

namespace lorenz {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Derives an independent stream seed from a master seed and a counter, so a
// replication's draws depend only on (master, index) and never on the order
// in which replications run.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept;

Rng make_rng(std::uint64_t seed);

}  // namespace lorenz
