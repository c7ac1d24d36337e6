#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsrforge/common.hpp"

namespace tsrforge {

bool is_prime_u64(std::uint64_t n);

// Complete factorization of n >= 1, sorted by prime. Trial division first,
// then Pollard rho with a fixed deterministic parameter schedule.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// q = p^k with p prime, k >= 1; nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t q);

}  // namespace tsrforge
