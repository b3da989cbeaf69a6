#include "permspec/numtheory.hpp"

#include "permspec/errors.hpp"

namespace permspec {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

bool is_prime_power(std::uint64_t n) {
    return factorize(n).size() == 1;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n < 1)
        throw DomainError("factorize: argument must be >= 1");
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

} // namespace permspec
