#include "permspec/bigcount.hpp"

#include <algorithm>

#include "permspec/errors.hpp"

namespace permspec {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
} // namespace

BigCount::BigCount(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void BigCount::trim() {
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

BigCount BigCount::from_decimal(const std::string& text) {
    if (text.empty())
        throw ParseError("empty decimal literal");
    BigCount result;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ParseError("bad decimal literal: \"" + text + "\"");
        // result = result * 10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : result.limbs_) {
            std::uint64_t v = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        while (carry != 0) {
            result.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    return result;
}

std::uint64_t BigCount::to_uint64() const {
    if (!fits_uint64())
        throw DomainError("BigCount " + to_decimal() + " does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1)
        v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty())
        v |= limbs_[0];
    return v;
}

std::string BigCount::to_decimal() const {
    if (is_zero())
        return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // divide work by 10^9, most significant limb first
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0)
            work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0')
        digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
    if (limbs_.size() < rhs.limbs_.size())
        limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = carry + limbs_[i];
        if (i < rhs.limbs_.size())
            v += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(v & 0xffffffffu);
        carry = v >> 32;
    }
    if (carry != 0)
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
    if (compare(rhs) < 0)
        throw DomainError("BigCount subtraction would be negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (v < 0) {
            v += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(v);
    }
    trim();
    return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                              out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry != 0) {
            std::uint64_t v = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
            ++k;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

std::size_t BigCount::bit_length() const {
    if (limbs_.empty())
        return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigCount::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size())
        return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigCount::shift_left_one_plus_bit(bool low_bit) {
    std::uint32_t carry = low_bit ? 1u : 0u;
    for (auto& limb : limbs_) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry != 0)
        limbs_.push_back(carry);
}

// Bitwise long division. The numbers in this library stay small (a few
// hundred bits at most), so the simple quadratic scheme is plenty.
BigCountDivMod BigCount::divmod(const BigCount& divisor) const {
    if (divisor.is_zero())
        throw DomainError("BigCount division by zero");
    BigCountDivMod result;
    if (compare(divisor) < 0) {
        result.remainder = *this;
        return result;
    }
    std::size_t bits = bit_length();
    result.quotient.limbs_.assign((bits + 31) / 32, 0);
    for (std::size_t i = bits; i-- > 0;) {
        result.remainder.shift_left_one_plus_bit(bit(i));
        if (result.remainder.compare(divisor) >= 0) {
            result.remainder -= divisor;
            result.quotient.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    result.quotient.trim();
    return result;
}

bool BigCount::divisible_by(const BigCount& divisor) const {
    return divmod(divisor).remainder.is_zero();
}

BigCount BigCount::exact_div(const BigCount& divisor, const char* context) const {
    BigCountDivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero())
        throw IntegralityError(std::string(context) + ": " + to_decimal() +
                               " is not divisible by " + divisor.to_decimal());
    return dm.quotient;
}

BigCount BigCount::pow(std::uint32_t exponent) const {
    BigCount result(1);
    BigCount base = *this;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

int BigCount::compare(const BigCount& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i])
            return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigCount factorial(unsigned n) {
    BigCount result(1);
    for (unsigned i = 2; i <= n; ++i)
        result *= BigCount(i);
    return result;
}

BigCount falling_factorial(unsigned n, unsigned k) {
    if (k > n)
        throw DomainError("falling_factorial: k exceeds n");
    BigCount result(1);
    for (unsigned i = 0; i < k; ++i)
        result *= BigCount(n - i);
    return result;
}

} // namespace permspec
