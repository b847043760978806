#pragma once

#include <cstdint>
#include <random>

namespace testsupport {

/// Seed for randomized suites; set with --seed=N.
std::uint64_t seed();
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 0x9e3779b97f4a7c15ull + salt); }

}  // namespace testsupport
