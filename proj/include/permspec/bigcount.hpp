#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permspec {

// Arbitrary-precision non-negative integer. Group orders, coset indexes
// and the Blichfeldt products (n-f_1)...(n-f_r) are always carried as
// BigCount, even when they would fit a machine word: the arithmetic in
// this library must stay exact, and a single representation avoids dual
// code paths.
//
// Representation: base 2^32 limbs, little endian, no trailing zero limbs
// (zero is the empty limb vector).
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t value);               // NOLINT: implicit by design
    static BigCount from_decimal(const std::string& text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    // Value as uint64_t; throws DomainError if it does not fit.
    std::uint64_t to_uint64() const;
    bool fits_uint64() const { return limbs_.size() <= 2; }

    std::string to_decimal() const;

    BigCount& operator+=(const BigCount& rhs);
    BigCount& operator-=(const BigCount& rhs);   // requires *this >= rhs
    BigCount& operator*=(const BigCount& rhs);

    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
    friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }
    friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

    // Quotient and remainder; divisor must be nonzero.
    struct BigCountDivMod divmod(const BigCount& divisor) const;

    bool divisible_by(const BigCount& divisor) const;
    // Division known to be exact; throws IntegralityError on remainder.
    BigCount exact_div(const BigCount& divisor, const char* context) const;

    BigCount pow(std::uint32_t exponent) const;

    int compare(const BigCount& rhs) const;
    friend bool operator==(const BigCount& a, const BigCount& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigCount& a, const BigCount& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigCount& a, const BigCount& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigCount& a, const BigCount& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigCount& a, const BigCount& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigCount& a, const BigCount& b) { return a.compare(b) >= 0; }

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    void shift_left_one_plus_bit(bool low_bit); // *this = *this * 2 + low_bit
};

struct BigCountDivMod {
    BigCount quotient;
    BigCount remainder;
};

BigCount factorial(unsigned n);
// n * (n-1) * ... * (n-k+1); the empty product (k = 0) is 1.
BigCount falling_factorial(unsigned n, unsigned k);

} // namespace permspec
