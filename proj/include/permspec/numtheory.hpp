#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace permspec {

bool is_prime(std::uint64_t n);
// True iff n = p^e with p prime and e >= 1.
bool is_prime_power(std::uint64_t n);
// Prime factorization by trial division, (prime, exponent) pairs in
// ascending prime order. n must be >= 1; factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

} // namespace permspec
